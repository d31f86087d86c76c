#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "avc.hpp"

namespace avck {

inline constexpr double kSymmetrizableTol = 1e-9;

/// Outcome of a symmetrizability decision. `f_value` is the distance from
/// symmetrizability: the minimum over channels U from inputs to states of the
/// worst input-pair L1 mismatch between the two cross-averaged output laws.
/// `u` is an attaining U when one is available; `residual` is the largest
/// violation of the symmetrizability equations at that U.
struct SymmetrizerResult {
  bool feasible = false;
  std::optional<Channel> u;
  double f_value = 0.0;
  double residual = 0.0;
};

/// Largest violation of the symmetrizability equations
///   sum_s w(y|x,s) u(s|x') == sum_s w(y|x',s) u(s|x)
/// over all inputs x, x' and outputs y.
double symmetrizer_residual(const Avc& avc, const Channel& u);

/// Global minimum of the distance functional over the polytope of channels
/// U: X -> S, solved exactly as a linear program (epigraph variables for the
/// max and for each absolute value). Requires at least two input symbols.
SymmetrizerResult symmetrizability_distance(const Avc& avc);

/// Distance verdict against a tolerance (default 1e-9).
SymmetrizerResult is_symmetrizable(const Avc& avc, double tol = kSymmetrizableTol);

/// Closed-form symmetrizer for a two-state BSC family {BSC(w1), BSC(w2)}.
/// Feasible iff |1 - w1 - w2| <= |w2 - w1|; the returned strategy is the
/// centered solution, the constant channel mixing the states to BSC(1/2).
/// Requires w1 != w2 (equal states leave the jammer without influence).
SymmetrizerResult bsc_pair_symmetrizer(double w1, double w2);

/// The offset u(2|1) - u(1|0) shared by every symmetrizer of the pair
/// {BSC(w1), BSC(w2)}: (1 - w1 - w2) / (w2 - w1).
double bsc_pair_symmetrizer_offset(double w1, double w2);

enum class TripleVerdict {
  non_symmetrizable,     // three-branch diversity breaks every symmetrizer
  exceptional_flip_case, // all three components are flip pairs: symmetrizable
  hypothesis_violated,   // equal states or a parameter of 1/2 somewhere
};

struct TripleClassification {
  TripleVerdict verdict;
  std::string reason;
};

/// Classifies the identical-state-constrained composite of three BSC
/// families by the closed-form criterion (parameters w[i][j] for component i,
/// state j).
TripleClassification classify_triple(const std::array<std::array<double, 2>, 3>& w);

enum class PairFlipVerdict {
  symmetrizable,
  not_symmetrizable,
  excluded,  // degenerate parameters
};

/// Classifies the identical-state-constrained composite of {BSC(w11),
/// BSC(w12)} with the flip pair {BSC(w21), BSC(1-w21)}: symmetrizable
/// exactly when w12 == 1 - w11.
PairFlipVerdict classify_pair_with_flip(double w11, double w12, double w21);

enum class CellVerdict { symmetrizable, non_symmetrizable, excluded };

struct RegionCell {
  double w11 = 0.0;
  double w12 = 0.0;
  double f_value = 0.0;
  CellVerdict verdict = CellVerdict::excluded;
};

/// Grid scan of the first component's parameter square for composites of
/// k in {1,2,3} branches under the identical state constraint. Components
/// 2 and 3, when present, are the flip pair {BSC(w21), BSC(1-w21)} and the
/// pair {BSC(w31), BSC(w32)}.
struct RegionScan {
  int k = 1;
  double step = 0.05;
  double w21 = 0.2;
  double w31 = 0.1;
  double w32 = 0.85;
  std::vector<RegionCell> cells;  // lexicographic in (w11, w12)
};

/// Every grid cell carries the exact distance value; cells outside the
/// canonical parameter domain (w11 >= 1/2), with a parameter at 1/2, or with
/// equal states are marked excluded, the rest symmetrizable or not by the
/// distance against `tol`. Deterministic: identical inputs give identical
/// scans regardless of evaluation order.
RegionScan region_scan(int k, double step, double w21 = 0.2, double w31 = 0.1,
                       double w32 = 0.85, double tol = kSymmetrizableTol);

/// CSV rows "w11,w12,f_value,verdict", 12 significant digits, '.' decimal,
/// no header, one row per cell in scan order.
std::string region_scan_csv(const RegionScan& scan);

}  // namespace avck
