#include "mdsym/words.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mdsym/congruence.hpp"

namespace mdsym {

namespace {

Word make_word(const GroupPreset& p, std::initializer_list<std::pair<const char*, long>> letters) {
  Word w;
  for (auto& [name, exp] : letters) {
    int i = p.find(name);
    if (i < 0) throw std::logic_error("preset letter missing");
    w.letters.push_back({i, exp});
  }
  return w;
}

}  // namespace

int GroupPreset::find(const std::string& gen_name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == gen_name) return static_cast<int>(i);
  return -1;
}

bool GroupPreset::contains(const ScaledMat& m) const {
  switch (membership_) {
    case Membership::sl2z:
      return m.e() == 1;
    case Membership::gamma0:
      return in_gamma0(m, level_);
    case Membership::gamma0_plus:
      return in_gamma0_plus(m, level_);
  }
  return false;
}

void GroupPreset::validate() const {
  for (const Word& rel : relations_)
    if (!eval_word(*this, rel).is_identity())
      throw std::logic_error("preset '" + name_ + "': relation word does not evaluate to I");
  for (const Generator& g : gens_)
    if (!contains(g.mat))
      throw std::logic_error("preset '" + name_ + "': generator fails membership");
  if (!data_.gauss_bonnet_ok())
    throw std::logic_error("preset '" + name_ + "': Gauss-Bonnet data mismatch");
}

GroupPreset make_sl2z() {
  GroupPreset p;
  p.name_ = "sl2z";
  p.level_ = 1;
  p.membership_ = GroupPreset::Membership::sl2z;
  p.kappa_ = Rat(0);
  p.data_ = GroupData{0, 1, {2, 3}, Rat(1, 3)};
  p.has_higher_order_ = false;
  p.gens_ = {
      {"S", mat_S(), 0, 0, Rat(-1, 4), Rat(0), 0, Rat(0), false},
      {"T", mat_T(), 0, 0, Rat(1, 12), Rat(0), 0, Rat(0), false},
      {"-I", mat_minus_I(), 0, 0, Rat(-1, 2), Rat(0), 0, Rat(0), true},
  };
  p.minus_I_ = 2;
  p.search_alphabet_ = {0, 1};
  // S^2 = -I, (ST)^3 = -I.
  p.relations_ = {make_word(p, {{"S", 1}, {"S", 1}, {"-I", 1}}),
                  make_word(p, {{"S", 1}, {"T", 1}, {"S", 1}, {"T", 1}, {"S", 1}, {"T", 1}, {"-I", 1}})};
  p.validate();
  return p;
}

GroupPreset make_gamma0_11() {
  GroupPreset p;
  p.name_ = "gamma0-11";
  p.level_ = 11;
  p.membership_ = GroupPreset::Membership::gamma0;
  p.kappa_ = Rat(1, 2);
  p.data_ = GroupData{1, 2, {}, Rat(4)};
  p.has_higher_order_ = true;
  p.has_cusp0_table_ = true;
  p.gens_ = {
      {"A", ScaledMat(-7, -1, 22, 3), 1, 0, Rat(-2, 5), Rat(9, 10), 0, Rat(1, 10), false},
      {"B", ScaledMat(4, 1, -33, -8), 0, 1, Rat(2, 5), Rat(1, 10), 0, Rat(9, 10), false},
      {"P0", ScaledMat(1, 0, -11, 1), 0, 0, Rat(0), Rat(0), 0, Rat(0), false},
      {"Pinf", mat_T(), 0, 0, Rat(1), Rat(0), 0, Rat(0), false},
      {"-I", mat_minus_I(), 0, 0, Rat(-1, 2), Rat(1, 2), 0, Rat(1, 2), true},
  };
  p.minus_I_ = 4;
  p.search_alphabet_ = {0, 1, 2, 3};
  // A B A^{-1} B^{-1} P0 Pinf = I.
  p.relations_ = {make_word(
      p, {{"A", 1}, {"B", 1}, {"A", -1}, {"B", -1}, {"P0", 1}, {"Pinf", 1}})};
  p.validate();
  return p;
}

GroupPreset make_gamma0_37plus() {
  GroupPreset p;
  p.name_ = "gamma0-37plus";
  p.level_ = 37;
  p.membership_ = GroupPreset::Membership::gamma0_plus;
  p.kappa_ = Rat(-19, 24);
  p.data_ = GroupData{1, 1, {2, 2, 2, 3}, Rat(19, 3)};
  p.has_higher_order_ = true;
  p.gens_ = {
      {"A", ScaledMat(148, -89, 185, -111, 37), 1, 0, Rat(1, 6), Rat(3, 8), 0, Rat(0), false},
      {"B", ScaledMat(20, -13, 37, -24), 0, 1, Rat(-7, 12), Rat(0), 1, Rat(0), false},
      {"E1", ScaledMat(0, 1, -37, 0, 37), 0, 0, Rat(1, 4), Rat(1, 4), 0, Rat(0), false},
      {"E2", ScaledMat(-6, 1, -37, 6), 0, 0, Rat(1, 4), Rat(1, 4), 0, Rat(0), false},
      {"E3", ScaledMat(-11, 3, -37, 10), 0, 0, Rat(1, 3), Rat(1, 3), 0, Rat(0), false},
      {"E4", ScaledMat(37, -19, 74, -37, 37), 0, 0, Rat(-1, 4), Rat(3, 4), 0, Rat(0), false},
      {"Pinf", ScaledMat(1, -1, 0, 1), 0, 0, Rat(-19, 12), Rat(0), 0, Rat(0), false},
  };
  p.minus_I_ = -1;
  p.search_alphabet_ = {0, 1, 2, 3, 4, 5, 6};
  // A B A^{-1} B^{-1} E4 E3 E2 E1 Pinf = I; E4^2 = E2^2 = E1^2 = -I; E3^3 = I.
  p.relations_ = {
      make_word(p, {{"A", 1}, {"B", 1}, {"A", -1}, {"B", -1}, {"E4", 1}, {"E3", 1},
                    {"E2", 1}, {"E1", 1}, {"Pinf", 1}}),
      make_word(p, {{"E1", 1}, {"E1", 1}, {"E1", 1}, {"E1", 1}}),
      make_word(p, {{"E2", 1}, {"E2", 1}, {"E2", 1}, {"E2", 1}}),
      make_word(p, {{"E4", 1}, {"E4", 1}, {"E4", 1}, {"E4", 1}}),
      make_word(p, {{"E3", 1}, {"E3", 1}, {"E3", 1}}),
  };
  for (const char* name : {"E1", "E2", "E4"}) {
    const ScaledMat& e = p.gens_[static_cast<size_t>(p.find(name))].mat;
    if (!(e * e).is_minus_identity())
      throw std::logic_error("gamma0-37plus: torsion relation E^2 = -I fails");
  }
  p.validate();
  return p;
}

const GroupPreset& GroupPreset::sl2z() {
  static const GroupPreset p = make_sl2z();
  return p;
}
const GroupPreset& GroupPreset::gamma0_11() {
  static const GroupPreset p = make_gamma0_11();
  return p;
}
const GroupPreset& GroupPreset::gamma0_37plus() {
  static const GroupPreset p = make_gamma0_37plus();
  return p;
}

const GroupPreset* GroupPreset::by_name(const std::string& name) {
  if (name == "sl2z") return &sl2z();
  if (name == "gamma0-11") return &gamma0_11();
  if (name == "gamma0-37plus") return &gamma0_37plus();
  return nullptr;
}

std::string GroupPreset::to_json() const {
  std::ostringstream os;
  os << "{\"name\":\"" << name_ << "\",\"level\":" << level_.get_str()
     << ",\"kappa\":\"" << kappa_.str() << "\",\"volume_over_pi\":\"" << data_.volume_over_pi.str()
     << "\",\"genus\":" << data_.genus << ",\"cusps\":" << data_.cusps << ",\"generators\":[";
  for (size_t i = 0; i < gens_.size(); ++i) {
    const Generator& g = gens_[i];
    if (i) os << ",";
    os << "{\"name\":\"" << g.name << "\",\"matrix\":\"" << g.mat.str() << "\",\"homology\":["
       << g.hom_m << "," << g.hom_n << "],\"S\":\"" << g.s_value.str() << "\"";
    if (has_higher_order_) {
      os << ",\"S_star_inf\":\"" << g.s_star_inf.str();
      if (g.s_star_xb == 1) os << " + X_B";
      else if (g.s_star_xb != 0) os << " + " << g.s_star_xb << "*X_B";
      os << " (mod 1)\"";
      if (has_cusp0_table_) os << ",\"S_star_0\":\"" << g.s_star_cusp0.str() << " (mod 1)\"";
    }
    os << "}";
  }
  os << "]}";
  return os.str();
}

ScaledMat eval_word(const GroupPreset& preset, const Word& w) {
  ScaledMat acc;
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(preset.generators().size()))
      throw std::invalid_argument("eval_word: letter outside alphabet");
    if (l.exp == 0) throw std::invalid_argument("eval_word: zero exponent");
    const ScaledMat& g = preset.gen(l.gen).mat;
    const ScaledMat base = l.exp > 0 ? g : g.inverse();
    acc = acc * mat_pow(base, static_cast<unsigned long>(l.exp > 0 ? l.exp : -l.exp));
  }
  return acc;
}

std::pair<long, long> exponent_sums(const GroupPreset& preset, const Word& w,
                                    const std::string& name_a, const std::string& name_b) {
  const int ia = preset.find(name_a);
  const int ib = preset.find(name_b);
  if (ia < 0 || ib < 0) throw std::invalid_argument("exponent_sums: name not in alphabet");
  long m = 0, n = 0;
  for (const Letter& l : w.letters) {
    if (l.gen == ia) m += l.exp;
    if (l.gen == ib) n += l.exp;
  }
  return {m, n};
}

namespace {

// Nearest-integer quotient of a/c for c != 0 (ties toward the floor).
Int round_div(const Int& a, const Int& c) {
  const Int cabs = abs(c);
  Int q = fdiv(a, cabs);
  const Int r = a - q * cabs;
  if (2 * r > cabs) q += 1;
  return sgn(c) > 0 ? q : Int(-q);
}

}  // namespace

Word sl2z_word(const ScaledMat& m) {
  if (m.e() != 1) throw std::invalid_argument("sl2z_word: matrix not in SL(2,Z)");
  const GroupPreset& p = GroupPreset::sl2z();
  const int S = p.find("S"), T = p.find("T"), MI = p.find("-I");
  Int a = m.a(), b = m.b(), c = m.c(), d = m.d();
  Word w;
  // Peel letters off the left: M = (prefix so far) * (a b; c d).
  while (sgn(c) != 0) {
    const Int q = round_div(a, c);
    if (sgn(q) != 0) {
      if (!q.fits_slong_p()) throw std::invalid_argument("sl2z_word: entry out of range");
      w.letters.push_back({T, q.get_si()});
      a -= q * c;  // T^{-q} * (a b; c d)
      b -= q * d;
    }
    w.letters.push_back({S, 1});
    // S^{-1} * (a b; c d) = (c, d; -a, -b).
    Int na = c, nb = d, nc = -a, nd = -b;
    a = na;
    b = nb;
    c = nc;
    d = nd;
  }
  if (a == -1) {
    w.letters.push_back({MI, 1});
    a = 1;
    b = -b;
  }
  if (sgn(b) != 0) {
    if (!b.fits_slong_p()) throw std::invalid_argument("sl2z_word: entry out of range");
    w.letters.push_back({T, b.get_si()});
  }
  return w;
}

namespace {

// Hyperbolic displacement of R z0 from the base point z0 = 1/2 + 6i/5,
// computed exactly from the integer entries: for R = (1/sqrt(e))(a b; c d),
//   cosh d(R z0, z0) - 1 = U(R) / (28800 e),
//   U(R) = (119c + 50(a-d) + 100b)^2 + (120(a-d-c))^2.
// The returned key is log2(U/e), monotone in the distance and immune to the
// catastrophic cancellation a floating-point Moebius action suffers once the
// entries pass ~1e8. U = 0 iff R = +-I (z0 is not an elliptic fixed point).
double displacement_key(const ScaledMat& r) {
  const Int u1 = 119 * r.c() + 50 * (r.a() - r.d()) + 100 * r.b();
  const Int u2 = 120 * (r.a() - r.d() - r.c());
  const Int u = u1 * u1 + u2 * u2;
  if (sgn(u) == 0) return -std::numeric_limits<double>::infinity();
  long exp_u = 0, exp_e = 0;
  const double mu = mpz_get_d_2exp(&exp_u, u.get_mpz_t());
  const double me = mpz_get_d_2exp(&exp_e, r.e().get_mpz_t());
  return std::log2(mu / me) + static_cast<double>(exp_u - exp_e);
}

std::string canonical_key(const ScaledMat& m) {
  // Key modulo +-I: fix the sign of the first nonzero of (a, b).
  bool flip = sgn(m.a()) < 0 || (sgn(m.a()) == 0 && sgn(m.b()) < 0);
  const ScaledMat r = flip ? -m : m;
  return r.str();
}

struct SearchNode {
  ScaledMat mat;  // remainder R with M = eval(prefix) * R
  int parent;     // index into node pool
  Letter letter;  // letter appended to reach this node
};

}  // namespace

Word solve_word(const GroupPreset& preset, const ScaledMat& m, const SolveOptions& opt) {
  if (!preset.contains(m))
    throw std::invalid_argument("solve_word: matrix not in group '" + preset.name() + "'");

  // Letters available to the search: non-central generators and inverses.
  struct Move {
    Letter letter;
    ScaledMat inv;  // letter matrix inverted, applied on the left
  };
  std::vector<Move> moves;
  for (int gi : preset.search_alphabet()) {
    const ScaledMat& g = preset.gen(gi).mat;
    moves.push_back({{gi, 1}, g.inverse()});
    moves.push_back({{gi, -1}, g});
  }

  std::vector<SearchNode> pool;
  std::unordered_set<std::string> visited;

  struct HeapEntry {
    double score;
    int parent;       // -1 for the root
    int move;         // -1 for the root
    bool operator<(const HeapEntry& o) const { return score > o.score; }  // min-heap
  };
  std::priority_queue<HeapEntry> heap;
  heap.push({displacement_key(m), -1, -1});
  std::size_t pushed = 1;

  int goal = -1;
  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    heap.pop();
    ScaledMat r = top.parent < 0 ? m : pool[static_cast<size_t>(top.parent)].mat;
    Letter letter{};
    if (top.move >= 0) {
      const Move& mv = moves[static_cast<size_t>(top.move)];
      r = mv.inv * r;
      letter = mv.letter;
    }
    if (!visited.insert(canonical_key(r)).second) continue;
    pool.push_back({r, top.parent, letter});
    const int id = static_cast<int>(pool.size()) - 1;
    if (r.is_plus_minus_identity()) {
      goal = id;
      break;
    }
    for (size_t mi = 0; mi < moves.size() && pushed < opt.node_budget; ++mi) {
      heap.push({displacement_key(moves[mi].inv * r), id, static_cast<int>(mi)});
      ++pushed;
    }
  }
  if (goal < 0)
    throw SolveBudgetExhausted("solve_word: node budget exhausted for '" + preset.name() +
                               "' on " + m.str());

  Word w;
  for (int id = goal;;) {
    const SearchNode& node = pool[static_cast<size_t>(id)];
    if (node.parent < 0) break;
    w.letters.push_back(node.letter);
    id = node.parent;
  }
  std::reverse(w.letters.begin(), w.letters.end());

  if (pool[static_cast<size_t>(goal)].mat.is_minus_identity()) {
    if (preset.minus_I_letter() >= 0) {
      w.letters.push_back({preset.minus_I_letter(), 1});
    } else {
      // -I is a product of elliptic letters; the shipped presets use E1^2.
      const int e1 = preset.find("E1");
      if (e1 < 0) throw std::logic_error("solve_word: no representation of -I in alphabet");
      w.letters.push_back({e1, 1});
      w.letters.push_back({e1, 1});
    }
  }
  if (!(eval_word(preset, w) == m)) throw std::logic_error("solve_word: verification failed");
  return w;
}

Word random_word(const GroupPreset& preset, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& alphabet = preset.search_alphabet();
  std::uniform_int_distribution<size_t> pick_gen(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> pick_sign(0, 1);
  Word w;
  w.letters.reserve(length);
  while (w.letters.size() < length) {
    Letter l{alphabet[pick_gen(rng)], pick_sign(rng) == 0 ? 1L : -1L};
    if (!w.letters.empty()) {
      const Letter& prev = w.letters.back();
      if (prev.gen == l.gen && prev.exp == -l.exp) continue;  // immediate cancellation
    }
    w.letters.push_back(l);
  }
  return w;
}

std::string word_str(const GroupPreset& preset, const Word& w) {
  if (w.letters.empty()) return "I";
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << preset.gen(w.letters[i].gen).name;
    if (w.letters[i].exp != 1) os << '^' << w.letters[i].exp;
  }
  return os.str();
}

}  // namespace mdsym
