#ifndef COMPCAT_FIBRATION_HPP
#define COMPCAT_FIBRATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compcat/fincat.hpp"

namespace compcat {

// m is p-cartesian: every psi into dst(m) whose image factors through p(m)
// factors uniquely through m over the given base factor.
bool is_cartesian(const FinFunctor& p, const MorId& m);

// All cartesian morphisms into y lying over f (sorted).
std::vector<MorId> cartesian_lifts(const FinFunctor& p, const MorId& f, const ObjId& y);

// Exactly one morphism into y over f, for every (f, y over dst f). The unique
// lifts are automatically cartesian, so this implies being a fibration.
bool is_discrete_fibration(const FinFunctor& p);

struct FibrationReport {
  bool fibration = false;
  bool discrete = false;
  std::optional<bool> splittable;  // nullopt: split search ran out of budget
  std::vector<std::string> witness_failures;
};

FibrationReport fibration_report(const FinFunctor& p, long long split_budget = 100000);

// Chosen cartesian lifts. Keyed by (base morphism f, object y over dst f).
struct Cleaving {
  std::map<std::pair<MorId, ObjId>, MorId> lift;

  const MorId& at(const MorId& f, const ObjId& y) const;
};

// Lexicographically least cartesian lift per (f, y); identities lift to
// identities. Throws NotAFibration when some lift is missing.
Cleaving compute_cleaving(const FinFunctor& p);

// lift(id) = id and lift(f*g, y) = lift(f, y) * lift(g, src lift(f, y)).
bool is_split(const FinFunctor& p, const Cleaving& c);

// Backtracking search for a split cleaving; nullopt when none exists. Throws
// BudgetExceeded when the search visits more than `budget` assignments.
std::optional<Cleaving> find_split_cleaving(const FinFunctor& p, long long budget = 100000);

// Strict pullback of p: total -> base along F: other_base -> base. Objects are
// pairs (d, t) with F(d) = p(t); morphisms pairs (u, m) with F(u) = p(m).
struct PullbackFibration {
  FinCategory total;
  FinFunctor proj;      // total -> other_base
  FinFunctor to_fiber;  // total -> dom p
};

PullbackFibration pullback_fibration(const FinFunctor& p, const FinFunctor& f);

}  // namespace compcat

#endif
