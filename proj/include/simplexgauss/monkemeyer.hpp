#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "simplexgauss/projective.hpp"

namespace simplexgauss {

// Piece label of the first-return map: family letter (A, B, C, ... = position
// inside one block of A-iterations) and index k >= 1. Family C only appears
// in dimension 3; dimensions above 3 use the generic letters implied by the
// block structure.
struct Symbol {
    int family = 1;  // 1 = A, 2 = B, 3 = C, ...
    long k = 1;

    char letter() const { return static_cast<char>('A' + family - 1); }
    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.family == b.family && a.k == b.k;
    }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
    friend bool operator<(const Symbol& a, const Symbol& b) {
        return a.family != b.family ? a.family < b.family : a.k < b.k;
    }
    std::string to_string() const { return std::string(1, letter()) + std::to_string(k); }
};

Symbol make_symbol(char letter, long k);

// Number of Farey-level A-steps before the B-branch fires: dim*k - family.
inline long farey_exponent(int dim, const Symbol& s) { return static_cast<long>(dim) * s.k - s.family; }
Symbol symbol_from_exponent(int dim, long a_steps);

// The two-branch map generators and base simplex for ambient dimension n,
// plus the closed-form return families.
class MapSystem {
  public:
    static constexpr int kMaxDim = 8;

    explicit MapSystem(int dim);

    int dim() const { return dim_; }
    const IMat& generator_a() const { return A_; }
    const IMat& generator_b() const { return B_; }
    const IMat& base_simplex() const { return V_; }

    // B * A^(dim*k - family)
    IMat family_matrix(const Symbol& s) const;
    IMat family_matrix_inverse(const Symbol& s) const;
    IMat piece_simplex(const Symbol& s) const;  // family_matrix_inverse * V

    QVec zero_vertex() const;

  private:
    int dim_;
    IMat A_, B_, V_;
    mutable std::map<std::pair<int, long>, IMat> fam_cache_, fam_inv_cache_;
    mutable std::mutex cache_mu_;
};

MapSystem make_map_system(int dim);  // 1 <= dim <= kMaxDim

enum class Branch { A, B };

// One step of the two-branch map. Branch A on x1 + xn <= 1 (the shared face
// goes to A), branch B otherwise. The point must lie in the base simplex.
template <class S>
std::pair<Vec<S>, Branch> monkemeyer_step(const MapSystem& sys, const Vec<S>& p);

struct Classification {
    Symbol symbol;
    bool boundary = false;  // point lies on a facet of its piece
};

// Exact piece classification with the half-open conventions: k* = floor(w/x);
// C when w - z < k*x (dim 3), else B when w - y < k*x, else A. Throws on the
// zero vertex.
template <class S>
Classification classify_piece(const MapSystem& sys, const Vec<S>& canonical_p);

// One step of the first-return map: classify, apply the family matrix,
// canonicalize. Zero vertex maps to itself with no symbol.
template <class S>
struct ReturnStep {
    Vec<S> point;
    std::optional<Symbol> symbol;
    bool boundary = false;
};

template <class S>
ReturnStep<S> return_step(const MapSystem& sys, const Vec<S>& canonical_p);

// Oracle route: iterate monkemeyer_step until the B branch fires and compose.
// Works in any dimension; the closed forms must agree with it.
template <class S>
ReturnStep<S> return_step_by_iteration(const MapSystem& sys, const Vec<S>& canonical_p);

enum class OrbitStatus { Ongoing, ReachedZero, Periodic };

template <class S>
struct Orbit {
    std::vector<Symbol> symbols;
    std::vector<bool> boundary_flags;
    std::vector<Vec<S>> states;  // states[0] = canonical input; filled when recorded
    OrbitStatus status = OrbitStatus::Ongoing;
    long preperiod = 0;
    long period = 0;

    std::vector<Symbol> preperiod_symbols() const {
        return {symbols.begin(), symbols.begin() + preperiod};
    }
    std::vector<Symbol> period_symbols() const {
        return {symbols.begin() + preperiod, symbols.begin() + preperiod + period};
    }
};

// Iterate the return map, recording symbols (and states when record_states),
// halting on the zero vertex, on a canonical-state revisit, or after
// max_steps.
template <class S>
Orbit<S> run_orbit(const MapSystem& sys, const Vec<S>& p, long max_steps,
                   bool record_states = true);

// Partial products X_{a_1}^{-1} ... X_{a_m}^{-1} V for m = 1..len(prefix);
// every matrix has |det| = 1.
std::vector<IMat> approx_simplexes(const MapSystem& sys, const std::vector<Symbol>& prefix);
IMat approx_matrix(const MapSystem& sys, const std::vector<Symbol>& prefix);

// ---- dimension-3 facet machinery -------------------------------------------

enum class FacetClass {
    EdgeA,
    FaceAB,
    FaceAC,
    FaceBC,
    FaceFRStart,
    InteriorConsistent,
};

std::string to_string(FacetClass c);

// Runs the face sub-shift automata on an itinerary prefix: A-streaks with
// strictly alternating B/C at faces AB/AC, one B/C entry symbol from BC, and
// the C1 entry from FR. First accepting start in the order EdgeA, FaceAB,
// FaceAC, FaceBC, FaceFRStart wins; otherwise InteriorConsistent.
FacetClass facet_subshift_check(const std::vector<Symbol>& itinerary);

// A maximal A-streak together with the following B or C symbol, in the
// convergent form used by the rewriting: p/q = [0; a_1..a_m], r/s its
// predecessor (1/0 for the empty streak).
struct BreveWord {
    char kind;  // 'B' or 'C'
    Integer p, q, r, s;
    long n;
};

struct StreakRewrite {
    std::vector<BreveWord> words;
    std::vector<Symbol> trailing_streak;  // unterminated A-streak, if any
};

// Groups a dimension-3 Fig-8-pattern prefix into breve words. Throws
// std::domain_error if the prefix violates the alternation pattern.
StreakRewrite streak_rewrite(const std::vector<Symbol>& prefix);

// Closed-form 4x4 matrix of a breve word (the inverse-word matrix); equals
// the product of the constituent inverse matrices.
IMat breve_matrix(const BreveWord& w);
IMat breve_matrix_from_product(const MapSystem& sys3, const std::vector<Symbol>& group);

// Embedding SL(2,Z) -> M_dim: a 2x2 matrix into the (1, dim+1) corner with
// identity elsewhere.
IMat sl2_embedding(int dim, const IMat& m2);

extern template std::pair<Vec<Rational>, Branch> monkemeyer_step<Rational>(const MapSystem&,
                                                                           const Vec<Rational>&);
extern template std::pair<Vec<NFElement>, Branch> monkemeyer_step<NFElement>(
    const MapSystem&, const Vec<NFElement>&);
extern template Classification classify_piece<Rational>(const MapSystem&, const Vec<Rational>&);
extern template Classification classify_piece<NFElement>(const MapSystem&, const Vec<NFElement>&);
extern template ReturnStep<Rational> return_step<Rational>(const MapSystem&, const Vec<Rational>&);
extern template ReturnStep<NFElement> return_step<NFElement>(const MapSystem&,
                                                             const Vec<NFElement>&);
extern template ReturnStep<Rational> return_step_by_iteration<Rational>(const MapSystem&,
                                                                        const Vec<Rational>&);
extern template ReturnStep<NFElement> return_step_by_iteration<NFElement>(const MapSystem&,
                                                                          const Vec<NFElement>&);
extern template Orbit<Rational> run_orbit<Rational>(const MapSystem&, const Vec<Rational>&, long,
                                                    bool);
extern template Orbit<NFElement> run_orbit<NFElement>(const MapSystem&, const Vec<NFElement>&,
                                                      long, bool);

}  // namespace simplexgauss
