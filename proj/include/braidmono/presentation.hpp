#pragma once

#include <array>
#include <string>
#include <vector>

#include "braidmono/perm.hpp"

namespace braidmono {

/// The five generators of B2(Sigma2) in Bellingeri's presentation.
enum class Gen { A1, A2, B1, B2, Sigma };

inline constexpr std::array<Gen, 5> kGenerators = {Gen::A1, Gen::A2, Gen::B1,
                                                   Gen::B2, Gen::Sigma};

std::string gen_name(Gen g);  // "a1", "a2", "b1", "b2", "s"

struct Letter {
  Gen gen;
  int exponent;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the generators and their inverses; empty = identity word.
using Word = std::vector<Letter>;

/// Concatenation of w1 and w2.
Word concat(const Word& w1, const Word& w2);

/// The formal inverse: letters reversed, exponents negated.
Word formal_inverse(const Word& w);

/// "s^-1 a1 s^-1 a1"; "1" for the empty word.
std::string word_text(const Word& w);

enum class RelationTag { R2a, R2b, R2c, R2d, R3a, R3b, R3c, R3d, R4a, R4b, TR };

inline constexpr int kRelationCount = 11;

std::string tag_name(RelationTag tag);

struct Relation {
  RelationTag tag;
  Word lhs;
  Word rhs;
};

/// The eleven defining relations of B2(Sigma2):
///   R2a-R2d:  s^-1 x s^-1 x = x s^-1 x s^-1        for x in {a1, a2, b1, b2}
///   R3a-R3d:  s^-1 x s y = y s^-1 x s              for (x,y) in {(a1,a2), (b1,b2), (a1,b2), (b1,a2)}
///   R4a-R4b:  s^-1 ai s^-1 bi = bi s^-1 ai s       for i in {1, 2}
///   TR:       [a1, b1^-1] [a2, b2^-1] = s^2        with [x, y] = x y x^-1 y^-1
const std::vector<Relation>& bellingeri_relations();

/// An assignment of one permutation of a common degree to each generator;
/// extends to a homomorphism B2(Sigma2) -> Sn iff all eleven relations hold.
class Assignment {
public:
  Assignment(Perm a1, Perm a2, Perm b1, Perm b2, Perm sigma);

  int degree() const { return a1_.degree(); }
  const Perm& image(Gen g) const;
  const Perm& a1() const { return a1_; }
  const Perm& a2() const { return a2_; }
  const Perm& b1() const { return b1_; }
  const Perm& b2() const { return b2_; }
  const Perm& sigma() const { return sigma_; }

private:
  Perm a1_, a2_, b1_, b2_, sigma_;
};

/// Product of the assigned images along the word, under the fixed
/// left-to-right composition convention; the empty word evaluates to the
/// identity.
Perm evaluate_word(const Word& w, const Assignment& asg);

/// Per-relation results, indexed in tag order (R2a..TR).
std::array<bool, kRelationCount> relation_pass_vector(const Assignment& asg);

/// True iff evaluate_word(lhs) == evaluate_word(rhs) for all eleven relations.
bool satisfies_all_relations(const Assignment& asg);

}  // namespace braidmono
