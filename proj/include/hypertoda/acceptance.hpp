#ifndef HYPERTODA_ACCEPTANCE_HPP
#define HYPERTODA_ACCEPTANCE_HPP

#include "hypertoda/curve.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hypertoda
{

struct Check {
    std::string tag;
    double value = 0;
    double threshold = 0;
    bool gating = true;
    std::string note;

    bool passed() const noexcept
    {
        return value < threshold; // false for NaN
    }
};

struct CriterionReport {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    std::string error; // set when a check threw

    bool passed() const noexcept;
    void add(std::string tag, double value, double threshold, bool gating = true, std::string note = {});
};

struct AcceptanceConfig {
    std::uint64_t seed = 20240607;
    int addition_samples = 50;
    int toda_samples = 20;
    // Curves for the genus-generic criteria (1-3); empty means the two canonical curves.
    std::vector<HyperellipticCurve> curves;
    double tol_scale = 1.0; // multiplies every threshold
};

HyperellipticCurve canonical_genus1();
HyperellipticCurve canonical_genus2();

CriterionReport criterion_legendre(const AcceptanceConfig &cfg);
CriterionReport criterion_addition(const AcceptanceConfig &cfg);
CriterionReport criterion_toda(const AcceptanceConfig &cfg);
CriterionReport criterion_division(const AcceptanceConfig &cfg);
CriterionReport criterion_torsion(const AcceptanceConfig &cfg);
CriterionReport criterion_spectral(const AcceptanceConfig &cfg);
CriterionReport criterion_poncelet(const AcceptanceConfig &cfg);

// Criteria 1-7, then 8 (runtime budget and a deterministic rerun).
std::vector<CriterionReport> run_acceptance(const AcceptanceConfig &cfg);

nlohmann::ordered_json to_json(const CriterionReport &r, bool with_timing = true);
std::string summary_line(const CriterionReport &r);

} // namespace hypertoda

#endif
