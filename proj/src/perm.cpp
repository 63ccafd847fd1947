#include "braidmono/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace braidmono {

Perm Perm::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("image sequence is not a bijection of {1.." +
                                  std::to_string(n) + "}");
    seen[v] = 1;
  }
  return Perm(std::move(images));
}

Perm Perm::from_one_line(const std::string& text) {
  // Accepts "[2,1,3]" with optional spaces around labels.
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw std::invalid_argument("permutation text must start with '[': " + text);
  ++i;
  std::vector<int> img;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    throw std::invalid_argument("permutation text must contain at least one label");
  }
  while (true) {
    skip_ws();
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw std::invalid_argument("expected a point label in: " + text);
    long v = std::strtol(text.substr(start, i - start).c_str(), nullptr, 10);
    if (v < 1) throw std::invalid_argument("point labels are 1-based in: " + text);
    img.push_back(static_cast<int>(v) - 1);
    skip_ws();
    if (i >= text.size()) throw std::invalid_argument("unterminated permutation text: " + text);
    if (text[i] == ',') { ++i; continue; }
    if (text[i] == ']') { ++i; break; }
    throw std::invalid_argument("unexpected character in permutation text: " + text);
  }
  skip_ws();
  if (i != text.size())
    throw std::invalid_argument("trailing characters after permutation text: " + text);
  return from_images(std::move(img));
}

Perm Perm::transposition(int degree, int i, int j) {
  if (i == j) throw std::invalid_argument("transposition needs two distinct points");
  Perm p = identity(degree);
  if (i < 0 || j < 0 || i >= degree || j >= degree)
    throw std::invalid_argument("transposition points out of range");
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Perm::to_one_line() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(img_[i] + 1);
  }
  out += ']';
  return out;
}

std::string Perm::cycle_notation() const {
  std::string out;
  std::vector<char> done(degree(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || img_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      done[j] = 1;
      j = img_[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

static void check_degrees(const Perm& p, const Perm& q, const char* op) {
  if (p.degree() != q.degree())
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
}

Perm compose(const Perm& p, const Perm& q) {
  check_degrees(p, q, "compose");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Perm::from_images(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[p[i]] = i;
  return Perm::from_images(std::move(img));
}

Perm conjugate(const Perm& p, const Perm& g) {
  check_degrees(p, g, "conjugate");
  // (g^-1 p g)(g(i)) = g(p(i))
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[g[i]] = g[p[i]];
  return Perm::from_images(std::move(img));
}

Perm power(const Perm& p, int e) {
  Perm base = e < 0 ? inverse(p) : p;
  int k = e < 0 ? -e : e;
  Perm acc = Perm::identity(p.degree());
  for (int i = 0; i < k; ++i) acc = compose(acc, base);
  return acc;
}

Perm commutator(const Perm& x, const Perm& y) {
  return compose(compose(compose(x, y), inverse(x)), inverse(y));
}

CycleType cycle_type(const Perm& p) {
  CycleType type;
  std::vector<char> done(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i]) continue;
    int len = 0, j = i;
    do {
      done[j] = 1;
      j = p[j];
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool is_transposition(const Perm& p) {
  int moved = 0;
  for (int i = 0; i < p.degree(); ++i) {
    if (p[i] == i) continue;
    if (p[p[i]] != i) return false;  // moved points must swap in pairs
    ++moved;
  }
  return moved == 2;
}

std::vector<int> orbit_of_point(const std::vector<Perm>& gens, int point) {
  if (gens.empty()) throw std::invalid_argument("orbit_of_point: empty generator list");
  const int n = gens.front().degree();
  if (point < 0 || point >= n) throw std::invalid_argument("orbit_of_point: point out of range");
  for (const Perm& g : gens) check_degrees(gens.front(), g, "orbit_of_point");
  std::vector<char> seen(n, 0);
  std::vector<int> stack{point}, orbit{point};
  seen[point] = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const Perm& g : gens) {
      int q = g[p];
      if (!seen[q]) {
        seen[q] = 1;
        orbit.push_back(q);
        stack.push_back(q);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  if (n > 20) throw std::invalid_argument("factorial(" + std::to_string(n) + ") overflows uint64");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace {

// Stabilizer chain with the fixed base (0, 1, ..., n-1). Level k holds
// generators fixing base points < k, the orbit of k under them, and a
// transversal u_p with u_p(k) = p. The chain is grown by sifting Schreier
// generators to a fixpoint; group order is the product of orbit sizes.
class StabilizerChain {
public:
  explicit StabilizerChain(const std::vector<Perm>& gens)
      : n_(gens.front().degree()), levels_(n_) {
    for (int k = 0; k < n_; ++k) levels_[k].transversal.assign(n_, Perm());
    for (const Perm& g : gens)
      if (!g.is_identity()) strong_gens_.push_back(g);
    rebuild();
    // Add sifted Schreier residues until every Schreier generator sifts to
    // the identity; each addition strictly grows some level's group.
    while (true) {
      Perm residue = first_defect();
      if (residue.degree() == 0) break;
      strong_gens_.push_back(std::move(residue));
      rebuild();
    }
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const Level& lvl : levels_) o *= static_cast<std::uint64_t>(lvl.orbit.size());
    return o;
  }

  std::uint64_t stabilizer_of_first_point_order() const {
    std::uint64_t o = 1;
    for (int k = 1; k < n_; ++k) o *= static_cast<std::uint64_t>(levels_[k].orbit.size());
    return o;
  }

private:
  struct Level {
    std::vector<Perm> gens;
    std::vector<int> orbit;              // points in the orbit of the base point
    std::vector<Perm> transversal;       // indexed by point; degree-0 = absent
  };

  void rebuild() {
    for (int k = 0; k < n_; ++k) {
      Level& lvl = levels_[k];
      lvl.gens.clear();
      for (const Perm& g : strong_gens_) {
        bool fixes_prefix = true;
        for (int b = 0; b < k && fixes_prefix; ++b) fixes_prefix = (g[b] == b);
        if (fixes_prefix) lvl.gens.push_back(g);
      }
      lvl.orbit.assign(1, k);
      std::fill(lvl.transversal.begin(), lvl.transversal.end(), Perm());
      lvl.transversal[k] = Perm::identity(n_);
      for (size_t i = 0; i < lvl.orbit.size(); ++i) {
        int p = lvl.orbit[i];
        for (const Perm& g : lvl.gens) {
          int q = g[p];
          if (lvl.transversal[q].degree() == 0) {
            lvl.transversal[q] = compose(lvl.transversal[p], g);
            lvl.orbit.push_back(q);
          }
        }
      }
    }
  }

  // Sifts g through levels >= k; returns identity iff g is in the level-k group.
  Perm sift(Perm g, int k) const {
    for (int j = k; j < n_; ++j) {
      int p = g[j];
      if (levels_[j].transversal[p].degree() == 0) return g;
      g = compose(g, inverse(levels_[j].transversal[p]));
    }
    return g;
  }

  // First Schreier generator that fails to sift; degree-0 Perm when none.
  Perm first_defect() const {
    for (int k = 0; k < n_; ++k) {
      const Level& lvl = levels_[k];
      for (int p : lvl.orbit) {
        for (const Perm& g : lvl.gens) {
          const Perm& u_p = lvl.transversal[p];
          const Perm& u_pg = lvl.transversal[g[p]];
          Perm schreier = compose(compose(u_p, g), inverse(u_pg));
          Perm residue = sift(std::move(schreier), k + 1);
          if (!residue.is_identity()) return residue;
        }
      }
    }
    return Perm();
  }

  int n_;
  std::vector<Level> levels_;
  std::vector<Perm> strong_gens_;
};

}  // namespace

GroupSummary summarize_generated_group(const std::vector<Perm>& gens) {
  if (gens.empty())
    throw std::invalid_argument("summarize_generated_group: empty generator list");
  const int n = gens.front().degree();
  for (const Perm& g : gens) check_degrees(gens.front(), g, "summarize_generated_group");
  GroupSummary s;
  s.transitive = static_cast<int>(orbit_of_point(gens, 0).size()) == n;
  StabilizerChain chain(gens);
  s.order = chain.order();
  s.point_stabilizer_order = chain.stabilizer_of_first_point_order();
  return s;
}

}  // namespace braidmono
