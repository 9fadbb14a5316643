#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdsym/arith.hpp"
#include "mdsym/matrix.hpp"
#include "mdsym/rational.hpp"

namespace mdsym {

/// One word letter: a generator of the preset alphabet raised to a nonzero
/// integer power. Search and random words use unit exponents; the SL(2,Z)
/// decomposition emits T-blocks so word length stays O(log max entry).
struct Letter {
  int gen = 0;   // index into GroupPreset::generators()
  long exp = 1;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

struct Generator {
  std::string name;
  ScaledMat mat;
  long hom_m = 0;         // homology coordinate on A
  long hom_n = 0;         // homology coordinate on B
  Rat s_value;            // S at the cusp infinity
  Rat s_star_inf;         // S* at infinity mod 1 (representative in [0,1))
  long s_star_xb = 0;     // coefficient of the undetermined X_B
  Rat s_star_cusp0;       // S* at the cusp 0 mod 1 (groups with a 0-cusp table)
  bool central = false;   // the -I letter
};

/// A group with a fixed generator alphabet, symbol tables, pairing constant
/// and membership test. The three shipped presets are validated against
/// their defining relations at construction time.
class GroupPreset {
 public:
  static const GroupPreset& sl2z();
  static const GroupPreset& gamma0_11();
  static const GroupPreset& gamma0_37plus();
  /// Lookup by CLI name: "sl2z", "gamma0-11", "gamma0-37plus"; null if unknown.
  static const GroupPreset* by_name(const std::string& name);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int find(const std::string& gen_name) const;  // -1 if absent
  const Generator& gen(int i) const { return gens_.at(static_cast<size_t>(i)); }

  /// Pairing constant kappa with S*(g t) = S*(g) + S*(t) + kappa (m1 n2 - n1 m2) + omega.
  const Rat& kappa() const { return kappa_; }
  const GroupData& group_data() const { return data_; }
  const Int& level() const { return level_; }
  bool has_higher_order() const { return has_higher_order_; }
  bool has_cusp0_table() const { return has_cusp0_table_; }
  bool contains(const ScaledMat& m) const;
  /// Defining relator words (each evaluates to the identity).
  const std::vector<Word>& relations() const { return relations_; }
  /// Generator indices used by the word-problem search (non-central letters).
  const std::vector<int>& search_alphabet() const { return search_alphabet_; }
  int minus_I_letter() const { return minus_I_; }  // -1 if -I is not a letter

  std::string to_json() const;

 private:
  friend GroupPreset make_sl2z();
  friend GroupPreset make_gamma0_11();
  friend GroupPreset make_gamma0_37plus();
  void validate() const;

  std::string name_;
  std::vector<Generator> gens_;
  Rat kappa_;
  GroupData data_;
  Int level_{1};
  bool has_higher_order_ = false;
  bool has_cusp0_table_ = false;
  enum class Membership { sl2z, gamma0, gamma0_plus } membership_ = Membership::sl2z;
  std::vector<Word> relations_;
  std::vector<int> search_alphabet_;
  int minus_I_ = -1;
};

/// Left-to-right normalized product of the word's letters.
ScaledMat eval_word(const GroupPreset& preset, const Word& w);

/// Signed exponent sums of the two named generators: (m, n).
std::pair<long, long> exponent_sums(const GroupPreset& preset, const Word& w,
                                    const std::string& name_a, const std::string& name_b);

/// Word over {S, T, -I} with eval = m, found by Euclidean reduction;
/// length O(log max |entry|). Throws if m is not in SL(2,Z).
Word sl2z_word(const ScaledMat& m);

struct SolveOptions {
  std::size_t node_budget = 1'000'000;
};

/// Thrown when the word search exhausts its node budget.
struct SolveBudgetExhausted : std::runtime_error {
  explicit SolveBudgetExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

/// Decompose m over the preset alphabet by best-first search on hyperbolic
/// displacement from the base point z0 = 1/2 + 6i/5. The result re-evaluates
/// to m exactly; search failure raises SolveBudgetExhausted, never a wrong
/// word. Membership is checked up front.
Word solve_word(const GroupPreset& preset, const ScaledMat& m, const SolveOptions& opt = {});

/// Deterministic random word of the given length with no immediate g g^{-1}
/// cancellation; letters drawn uniformly from the search alphabet x {+1,-1}.
Word random_word(const GroupPreset& preset, std::size_t length, std::uint64_t seed);

/// Render like "-I S T^3 S T^-7 S".
std::string word_str(const GroupPreset& preset, const Word& w);

}  // namespace mdsym
