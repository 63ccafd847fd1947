#include "braidmono/presentation.hpp"

#include <stdexcept>

namespace braidmono {

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::A1: return "a1";
    case Gen::A2: return "a2";
    case Gen::B1: return "b1";
    case Gen::B2: return "b2";
    case Gen::Sigma: return "s";
  }
  throw std::logic_error("unknown generator");
}

std::string tag_name(RelationTag tag) {
  switch (tag) {
    case RelationTag::R2a: return "R2a";
    case RelationTag::R2b: return "R2b";
    case RelationTag::R2c: return "R2c";
    case RelationTag::R2d: return "R2d";
    case RelationTag::R3a: return "R3a";
    case RelationTag::R3b: return "R3b";
    case RelationTag::R3c: return "R3c";
    case RelationTag::R3d: return "R3d";
    case RelationTag::R4a: return "R4a";
    case RelationTag::R4b: return "R4b";
    case RelationTag::TR: return "TR";
  }
  throw std::logic_error("unknown relation tag");
}

Word concat(const Word& w1, const Word& w2) {
  Word out = w1;
  out.insert(out.end(), w2.begin(), w2.end());
  return out;
}

Word formal_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exponent});
  return out;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += gen_name(l.gen);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

namespace {

Letter pos(Gen g) { return {g, 1}; }
Letter neg(Gen g) { return {g, -1}; }

// s^-1 x s^-1 x = x s^-1 x s^-1
Relation r2(RelationTag tag, Gen x) {
  return {tag,
          {neg(Gen::Sigma), pos(x), neg(Gen::Sigma), pos(x)},
          {pos(x), neg(Gen::Sigma), pos(x), neg(Gen::Sigma)}};
}

// s^-1 x s y = y s^-1 x s
Relation r3(RelationTag tag, Gen x, Gen y) {
  return {tag,
          {neg(Gen::Sigma), pos(x), pos(Gen::Sigma), pos(y)},
          {pos(y), neg(Gen::Sigma), pos(x), pos(Gen::Sigma)}};
}

// s^-1 a s^-1 b = b s^-1 a s
Relation r4(RelationTag tag, Gen a, Gen b) {
  return {tag,
          {neg(Gen::Sigma), pos(a), neg(Gen::Sigma), pos(b)},
          {pos(b), neg(Gen::Sigma), pos(a), pos(Gen::Sigma)}};
}

// [x, y^-1] written out with [x, y] = x y x^-1 y^-1
Word bracket_with_inverse(Gen x, Gen y) {
  return {pos(x), neg(y), neg(x), pos(y)};
}

std::vector<Relation> build_relations() {
  std::vector<Relation> rels;
  rels.push_back(r2(RelationTag::R2a, Gen::A1));
  rels.push_back(r2(RelationTag::R2b, Gen::A2));
  rels.push_back(r2(RelationTag::R2c, Gen::B1));
  rels.push_back(r2(RelationTag::R2d, Gen::B2));
  rels.push_back(r3(RelationTag::R3a, Gen::A1, Gen::A2));
  rels.push_back(r3(RelationTag::R3b, Gen::B1, Gen::B2));
  rels.push_back(r3(RelationTag::R3c, Gen::A1, Gen::B2));
  rels.push_back(r3(RelationTag::R3d, Gen::B1, Gen::A2));
  rels.push_back(r4(RelationTag::R4a, Gen::A1, Gen::B1));
  rels.push_back(r4(RelationTag::R4b, Gen::A2, Gen::B2));
  rels.push_back({RelationTag::TR,
                  concat(bracket_with_inverse(Gen::A1, Gen::B1),
                         bracket_with_inverse(Gen::A2, Gen::B2)),
                  {{Gen::Sigma, 2}}});
  return rels;
}

}  // namespace

const std::vector<Relation>& bellingeri_relations() {
  static const std::vector<Relation> rels = build_relations();
  return rels;
}

Assignment::Assignment(Perm a1, Perm a2, Perm b1, Perm b2, Perm sigma)
    : a1_(std::move(a1)),
      a2_(std::move(a2)),
      b1_(std::move(b1)),
      b2_(std::move(b2)),
      sigma_(std::move(sigma)) {
  const int n = a1_.degree();
  if (n < 1) throw std::invalid_argument("assignment needs permutations of degree >= 1");
  if (a2_.degree() != n || b1_.degree() != n || b2_.degree() != n || sigma_.degree() != n)
    throw std::invalid_argument("assignment: generator images have mixed degrees");
}

const Perm& Assignment::image(Gen g) const {
  switch (g) {
    case Gen::A1: return a1_;
    case Gen::A2: return a2_;
    case Gen::B1: return b1_;
    case Gen::B2: return b2_;
    case Gen::Sigma: return sigma_;
  }
  throw std::logic_error("unknown generator");
}

Perm evaluate_word(const Word& w, const Assignment& asg) {
  Perm acc = Perm::identity(asg.degree());
  for (const Letter& l : w) {
    const Perm& img = asg.image(l.gen);
    const Perm factor = l.exponent < 0 ? inverse(img) : img;
    int k = l.exponent < 0 ? -l.exponent : l.exponent;
    for (int i = 0; i < k; ++i) acc = compose(acc, factor);
  }
  return acc;
}

std::array<bool, kRelationCount> relation_pass_vector(const Assignment& asg) {
  std::array<bool, kRelationCount> pass{};
  const std::vector<Relation>& rels = bellingeri_relations();
  for (int i = 0; i < kRelationCount; ++i)
    pass[i] = evaluate_word(rels[i].lhs, asg) == evaluate_word(rels[i].rhs, asg);
  return pass;
}

bool satisfies_all_relations(const Assignment& asg) {
  for (const Relation& rel : bellingeri_relations())
    if (evaluate_word(rel.lhs, asg) != evaluate_word(rel.rhs, asg)) return false;
  return true;
}

}  // namespace braidmono
