#include "spectra_perturb/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spectra_perturb/quantities.hpp"

namespace spectra_perturb {

namespace {

constexpr std::uint64_t kStreamSize = 7;
constexpr double kOrderingSlack = 1e-12;
constexpr double kIdentitySlack = 1e-9;
constexpr std::size_t kMaxMessages = 20;

// Names and order of the per-trial ordering checks.
const std::vector<std::string>& ordering_names()
{
    static const std::vector<std::string> names = {
        "d_inf<=d2",
        "eq_3_5a<=eq_1_4",
        "eq_3_11a<=eq_1_5",
        "eq_3_5f<=eq_1_7",
        "eq_4_6a<=eq_1_6",
        "eq_4_6b<=eq_1_8",
        "eq_4_6c<=eq_1_9",
        "eq_4_6c<=sqrt2_e_fro",
        "eq_4_6b<=e_fro_plus_departure",
        "eq_4_6c<=e_fro_plus_departure",
        "departure<=thm_4_3_a",
    };
    return names;
}

bool is_d2_bound(const std::string& id) { return id.rfind("eq_", 0) == 0 || id == "hoffman_wielandt"; }

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

class TrialChecker {
public:
    TrialChecker(const PerturbationCase& c, const BoundReport& r, TrialResult& out) : c_(c), r_(r), out_(out)
    {
        for (const auto& name : ordering_names()) {
            out_.orderings.push_back(OrderingStats{name});
        }
    }

    void run()
    {
        for (const auto& id : r_.violations) {
            out_.violations.push_back("domination " + id);
        }
        orderings();
        reductions();
        schur_chain();
        if (c_.a_is_hermitian) {
            hermitian_identities();
        }
    }

private:
    std::optional<double> value(std::string_view id) const
    {
        const BoundValue* b = r_.find(id);
        return b ? b->value : std::nullopt;
    }

    void order(std::size_t index, std::optional<double> lhs, std::optional<double> rhs, double slack_scale = -1.0)
    {
        if (!lhs || !rhs) {
            return;
        }
        OrderingStats& s = out_.orderings[index];
        const double slack = kOrderingSlack * (slack_scale < 0.0 ? 1.0 + std::abs(*rhs) : slack_scale);
        ++s.checked;
        if (*lhs > *rhs + slack) {
            ++s.violated;
            out_.violations.push_back("ordering " + s.name + ": " + fmt(*lhs) + " > " + fmt(*rhs));
        } else if (*lhs < *rhs - slack) {
            ++s.strict;
        }
    }

    void equal(const std::string& what, double x, double y, double slack)
    {
        if (std::abs(x - y) > slack) {
            out_.violations.push_back("identity " + what + ": " + fmt(x) + " vs " + fmt(y));
        }
    }

    void orderings()
    {
        const CaseQuantities& q = r_.quantities;
        order(0, r_.d_inf, r_.d2);
        order(1, value("eq_3_5a"), value("eq_1_4"));
        order(2, value("eq_3_11a"), value("eq_1_5"));
        order(3, value("eq_3_5f"), value("eq_1_7"));
        order(4, value("eq_4_6a"), value("eq_1_6"));
        order(5, value("eq_4_6b"), value("eq_1_8"));
        order(6, value("eq_4_6c"), value("eq_1_9"));
        const auto c46 = value("eq_4_6c");
        order(7, c46, c46 ? std::optional<double>(std::numbers::sqrt2 * q.e_fro) : std::nullopt);
        const auto sum = std::optional<double>(q.e_fro + q.departure);
        order(8, value("eq_4_6b"), value("eq_4_6b") ? sum : std::nullopt);
        order(9, c46, c46 ? sum : std::nullopt);
        const auto t43 = value("thm_4_3_a");
        order(10, t43 ? std::optional<double>(q.departure) : std::nullopt, t43, 1.0 + q.a_tilde_fro);
    }

    // Degenerate cases in which two catalog entries coincide.
    void reductions()
    {
        const CaseQuantities& q = r_.quantities;
        auto same = [&](std::string_view x, std::string_view y) {
            const auto vx = value(x);
            const auto vy = value(y);
            if (vx && vy) {
                equal(std::string(x) + "==" + std::string(y), *vx, *vy, kOrderingSlack * (1.0 + std::abs(*vy)));
            }
        };
        same("eq_3_3c", "eq_3_5c");
        if (q.s == 1) {
            same("eq_3_11a", "eq_3_5a");
            same("eq_3_11b", "eq_3_5b");
            same("eq_3_11c", "eq_3_5d");
        }
        if (q.w == q.n - 1) {
            same("eq_3_3a", "eq_3_5a");
            same("eq_3_3b", "eq_3_5b");
            same("eq_3_3d", "eq_3_5d");
            same("eq_3_4a", "eq_3_5e");
            same("eq_3_4b", "eq_3_5f");
        }
    }

    // D2 <= ||U~^* E U~ - Delta||_F <= each bound derived through it.
    void schur_chain()
    {
        const double tol = r_.tol_violation;
        const double residual = r_.quantities.schur_residual;
        if (r_.d2 > residual + tol) {
            out_.violations.push_back("chain d2 <= schur_residual: " + fmt(r_.d2) + " > " + fmt(residual));
        }
        for (const auto& b : r_.bounds) {
            const bool through_residual = b.family == BoundFamily::lemma_3_4 || b.family == BoundFamily::lemma_3_5 ||
                                          b.family == BoundFamily::theorem_3_6 ||
                                          b.family == BoundFamily::theorem_4_2;
            if (through_residual && b.applicable() && residual > *b.value + tol) {
                out_.violations.push_back("chain schur_residual <= " + b.id + ": " + fmt(residual) + " > " +
                                          fmt(*b.value));
            }
        }
        const Matrix rotated_a = to_schur_basis(c_, c_.a);
        const Matrix rotated_e = to_schur_basis(c_, c_.e);
        const double lower_sum = (strict_lower(rotated_a) + strict_lower(rotated_e)).norm();
        if (lower_sum > kIdentitySlack * (r_.quantities.a_fro + r_.quantities.e_fro)) {
            out_.violations.push_back("identity lower parts cancel: " + fmt(lower_sum));
        }
    }

    void hermitian_identities()
    {
        const CaseQuantities& q = r_.quantities;
        const Matrix rotated_e = to_schur_basis(c_, c_.e);
        const double lhs = q.schur_residual * q.schur_residual;
        const double rhs = q.e_fro * q.e_fro + strict_lower(rotated_e).squaredNorm() -
                           strict_upper(rotated_e).squaredNorm();
        equal("hermitian residual split", lhs, rhs, kIdentitySlack * (1.0 + q.e_fro * q.e_fro));

        const auto a = value("thm_4_3_a");
        const auto b = value("thm_4_3_b");
        if (a && b) {
            equal("thm_4_3_a==thm_4_3_b", *a, *b, kOrderingSlack * (1.0 + q.a_tilde_fro));
        }
    }

    const PerturbationCase& c_;
    const BoundReport& r_;
    TrialResult& out_;
};

}  // namespace

void CampaignConfig::validate() const
{
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (n_min < 2 || n_max < n_min) {
        throw std::invalid_argument("need 2 <= n-min <= n-max");
    }
    if (!std::isfinite(tol) || tol < 0.0) {
        throw std::invalid_argument("tol must be finite and non-negative");
    }
    if (!std::isfinite(perturbation_scale) || perturbation_scale <= 0.0) {
        throw std::invalid_argument("perturbation scale must be finite and positive");
    }
    if (jobs < 1) {
        throw std::invalid_argument("jobs must be at least 1");
    }
}

TrialResult run_trial(const CampaignConfig& config, std::size_t trial)
{
    TrialResult out;
    out.trial = trial;
    out.seed = trial_seed(config.seed, trial);
    Rng size_rng(derive_seed(out.seed, kStreamSize));
    out.n = size_rng.uniform_index(config.n_min, config.n_max);

    EnsembleSpec spec;
    spec.n = out.n;
    spec.kind = config.kind;
    spec.trace_mode = config.trace_mode;
    spec.perturbation_scale = config.perturbation_scale;
    spec.seed = out.seed;
    try {
        const PerturbationCase c = generate_case(spec);
        BoundReport report = evaluate_all(c, true, default_violation_tolerance(c, config.tol));
        out.d2 = report.d2;
        for (const auto& id : bound_catalog_ids()) {
            const BoundValue* b = report.find(id);
            out.values.push_back(b ? b->value : std::nullopt);
        }
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : report.bounds) {
            if (b.target == BoundTarget::d2 && b.applicable() && *b.value < best) {
                best = *b.value;
                out.winner = b.id;
            }
        }
        TrialChecker(c, report, out).run();
    } catch (const std::exception& e) {
        out.error = e.what();
        out.violations.push_back(std::string("error: ") + e.what());
    }
    return out;
}

CampaignSummary run_campaign(const CampaignConfig& config)
{
    config.validate();
    std::vector<TrialResult> results(config.trials);
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(config.trials)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < config.trials; k = next++) {
            results[k] = run_trial(config, k);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    CampaignSummary s;
    s.config = config;
    s.trials = config.trials;
    for (const auto& name : ordering_names()) {
        s.orderings.push_back(OrderingStats{name});
    }
    const auto& ids = bound_catalog_ids();
    for (const auto& r : results) {
        if (!r.winner.empty()) {
            ++s.wins[r.winner];
        }
        for (std::size_t i = 0; i < r.values.size(); ++i) {
            const auto& id = ids[i];
            if (!r.values[i] || !is_d2_bound(id)) {
                continue;
            }
            const double slack = *r.values[i] - r.d2;
            const auto it = s.max_slack.find(id);
            if (it == s.max_slack.end() || slack > it->second) {
                s.max_slack[id] = slack;
            }
        }
        for (std::size_t i = 0; i < r.orderings.size(); ++i) {
            s.orderings[i].checked += r.orderings[i].checked;
            s.orderings[i].strict += r.orderings[i].strict;
            s.orderings[i].violated += r.orderings[i].violated;
        }
        if (!r.violations.empty()) {
            ++s.violation_count;
            for (const auto& v : r.violations) {
                if (s.violation_messages.size() < kMaxMessages) {
                    s.violation_messages.push_back("trial " + std::to_string(r.trial) + ": " + v);
                }
            }
        }
    }
    s.results = std::move(results);
    return s;
}

Json summary_to_json(const CampaignSummary& s)
{
    const CampaignConfig& c = s.config;
    Json out;
    out["config"] = Json{
        {"trials", c.trials},
        {"n_min", c.n_min},
        {"n_max", c.n_max},
        {"kind", std::string(to_string(c.kind))},
        {"trace_mode", std::string(to_string(c.trace_mode))},
        {"perturbation_scale", c.perturbation_scale},
        {"seed", c.seed},
        {"tol", c.tol},
    };
    out["trials"] = s.trials;
    Json bounds = Json::array();
    for (const auto& id : bound_catalog_ids()) {
        const auto w = s.wins.find(id);
        const auto m = s.max_slack.find(id);
        bounds.push_back(Json{
            {"id", id},
            {"wins", w == s.wins.end() ? 0 : w->second},
            {"max_slack", m == s.max_slack.end() ? Json(nullptr) : Json(m->second)},
        });
    }
    out["bounds"] = std::move(bounds);
    Json orderings = Json::array();
    for (const auto& o : s.orderings) {
        orderings.push_back(Json{{"name", o.name}, {"checked", o.checked}, {"strict", o.strict}, {"violated", o.violated}});
    }
    out["orderings"] = std::move(orderings);
    out["violation_count"] = s.violation_count;
    out["violations"] = s.violation_messages;
    return out;
}

std::string win_histogram_csv(const CampaignSummary& s)
{
    std::string out = "id,wins,max_slack\n";
    for (const auto& b : bound_catalog_ids()) {
        const auto w = s.wins.find(b);
        const auto m = s.max_slack.find(b);
        if (!is_d2_bound(b)) {
            continue;
        }
        out += b + ',' + std::to_string(w == s.wins.end() ? 0 : w->second) + ',' +
               (m == s.max_slack.end() ? std::string() : fmt(m->second)) + '\n';
    }
    return out;
}

std::string trials_csv(const CampaignSummary& s)
{
    std::string out = csv_header() + '\n';
    const std::string kind(to_string(s.config.kind));
    for (const auto& r : s.results) {
        out += std::to_string(r.trial) + ',' + std::to_string(r.n) + ',' + kind + ',' + fmt(r.d2);
        for (const auto& v : r.values) {
            out += ',';
            if (v) {
                out += fmt(*v);
            }
        }
        out += r.violations.empty() ? ",0\n" : ",1\n";
    }
    return out;
}

}  // namespace spectra_perturb
