#ifndef SPECTRA_PERTURB_CAMPAIGN_HPP
#define SPECTRA_PERTURB_CAMPAIGN_HPP

// Randomized verification campaigns. Trial k draws its case from the seed
// trial_seed(seed, k) alone, so results do not depend on the number of
// worker threads or the order in which trials finish.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectra_perturb/bounds.hpp"
#include "spectra_perturb/ensembles.hpp"
#include "spectra_perturb/report_io.hpp"

namespace spectra_perturb {

struct CampaignConfig {
    std::size_t trials = 1;
    Eigen::Index n_min = 2;
    Eigen::Index n_max = 2;
    EnsembleKind kind = EnsembleKind::normal;
    TraceMode trace_mode = TraceMode::generic;
    double perturbation_scale = 1.0;
    std::uint64_t seed = 0;
    /// Relative domination slack; the absolute slack is tol * (1 + ||A|| + ||E||).
    double tol = 1e-8;
    unsigned jobs = 1;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
};

/// A pairwise comparison lhs <= rhs checked on every trial where both sides
/// are defined.
struct OrderingStats {
    std::string name;
    std::size_t checked = 0;
    std::size_t strict = 0;  // lhs < rhs beyond the comparison slack
    std::size_t violated = 0;
};

struct TrialResult {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    Eigen::Index n = 0;
    double d2 = 0.0;
    /// Catalog id of the smallest applicable D2 bound (ties: catalog order).
    std::string winner;
    std::vector<std::string> violations;
    /// Per ordering name: (checked, strict, violated) for this trial.
    std::vector<OrderingStats> orderings;
    /// Catalog values in bound_catalog_ids() order.
    std::vector<std::optional<double>> values;
    std::string error;
};

struct CampaignSummary {
    CampaignConfig config;
    std::size_t trials = 0;
    std::map<std::string, std::size_t> wins;       // catalog id -> trials won
    std::map<std::string, double> max_slack;       // catalog id -> max(bound - d2)
    std::vector<OrderingStats> orderings;
    std::size_t violation_count = 0;               // trials with at least one violation
    std::vector<std::string> violation_messages;   // first few, "trial k: ..."
    std::vector<TrialResult> results;              // in trial order
};

/// Runs one trial; never throws for numerical failures (they become violations).
TrialResult run_trial(const CampaignConfig& config, std::size_t trial);

CampaignSummary run_campaign(const CampaignConfig& config);

/// Summary as JSON (no timing, so equal seeds give byte-identical output).
Json summary_to_json(const CampaignSummary& summary);

/// "id,wins,max_slack" rows over the D2-bound catalog ids.
std::string win_histogram_csv(const CampaignSummary& summary);

/// Per-trial CSV with the columns of csv_header().
std::string trials_csv(const CampaignSummary& summary);

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_CAMPAIGN_HPP
