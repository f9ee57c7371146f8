#pragma once

#include <string>
#include <vector>

#include "octapet/bundle.hpp"

namespace octapet {

/// One verification item inside a calculation: a short label, the outcome,
/// and a human-readable detail string (counts, witnesses, failure reasons).
struct CalcCheck {
    std::string label;
    bool ok = false;
    std::string detail;
};

/// Outcome of one of the eight partition calculations.
struct CalcReport {
    std::string name;
    std::vector<CalcCheck> checks;

    bool ok() const {
        for (const CalcCheck& c : checks) {
            if (!c.ok) return false;
        }
        return !checks.empty();
    }
};

/// 1: the inverse map agrees with its mu-conjugate on the fiber interval
/// [105, 420], verified structurally (48 overlapping domain pairs) and on an
/// integer grid meeting every pair.
CalcReport calc1(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// 2: the forward map agrees with its nu-conjugate on [105, 210];
/// 27 overlapping domain pairs.
CalcReport calc2(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// 3: renormalization on [525, 840] via the fiber shift z -> z + 420.  Return
/// chains of every nontrivial piece reach the shifted copy exactly, the
/// intermediate polytopes avoid the return region, the shifted trivial tile
/// has period 2, and the chain elements tile the bundle section exactly.
CalcReport calc3(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// 4: renormalization on [210, 315] via the volume-preserving fiber map
/// z -> 420 - z; same chain structure as calculation 3.
CalcReport calc4(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// 5: modular conjugacy between the fiber intervals (420, 840] and
/// (420, 560]: return chains terminate exactly and the return region
/// boundary is covered by tracked polytope boundaries.
CalcReport calc5(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// 6: the period-2 tile over (420, 630], the translation formula on the
/// return domain over [420, 525], and the complementary-region identity at
/// the end fibers.
CalcReport calc6(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// 7: modular conjugacy between the fiber intervals [210, 420] and
/// [315, 420] (computed at doubled scale); mirror of calculation 5.
CalcReport calc7(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// 8: the period-2 tile over [315, 420], the translation formula on the
/// reduced return domain, and the complementary-region identity; mirror of
/// calculation 6.
CalcReport calc8(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

/// Runs all eight calculations in order.
std::vector<CalcReport> run_all_calcs(const PiecewiseAffineSystem& sys, const std::string& fixtures_dir);

std::string calc_reports_to_json(const std::vector<CalcReport>& reports);

}  // namespace octapet
