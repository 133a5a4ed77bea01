#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bhopm {

/// Ordinal grade scale 1..K. The fixed-endpoint threshold scheme needs K >= 3.
struct GradeScale {
    int k = 4;
};

void validate(const GradeScale& scale);

struct Observation {
    std::int32_t candidate = 0;    // dense 0..C-1
    std::int32_t interviewer = 0;  // dense 0..I-1
    std::int32_t round = 0;        // dense 0..R-1
    int grade = 1;                 // 1..K
    double order_key = 0.0;        // meaningful only when Dataset::has_order_keys

    bool operator==(const Observation&) const = default;
};

/// Hire outcome per candidate; unknown when the column is absent.
enum class HireFlag : std::int8_t { unknown = -1, not_hired = 0, hired = 1 };

struct Dataset {
    std::vector<Observation> observations;
    int C = 0;
    int I = 0;
    int R = 0;
    GradeScale scale;
    std::vector<std::string> candidate_ids;
    std::vector<std::string> interviewer_ids;
    std::vector<std::string> round_labels;
    bool has_order_keys = false;
    std::vector<HireFlag> hired;  // size C when outcomes present, else empty

    // Set only on datasets produced by chronological_split (the test side):
    // entity did not occur in the train window.
    std::vector<std::uint8_t> unseen_candidates;
    std::vector<std::uint8_t> unseen_interviewers;

    std::size_t size() const { return observations.size(); }
    bool has_hired() const { return !hired.empty(); }
    bool row_unseen(const Observation& obs) const;

    std::optional<int> candidate_index(const std::string& id) const;
    std::optional<int> interviewer_index(const std::string& id) const;
    std::optional<int> round_index(const std::string& label) const;

    bool operator==(const Dataset&) const = default;
};

struct ColumnSchema {
    std::string candidate = "candidate_id";
    std::string interviewer = "interviewer_id";
    std::string round = "round";
    std::string grade = "grade";
    std::string order_key = "order_key";  // loaded when the column exists
    std::string hired = "hired";          // loaded when the column exists
    int k_categories = 4;
    // Optional explicit round ordering (e.g. meeting < interview < final).
    // When empty, rounds are indexed in first-appearance order.
    std::vector<std::string> round_order;
};

Dataset load_csv(std::istream& source, const ColumnSchema& schema);
Dataset load_csv_file(const std::string& path, const ColumnSchema& schema);
void write_csv(const Dataset& ds, std::ostream& out);
std::string to_csv(const Dataset& ds);

/// FNV-1a hash of the canonical CSV serialization; identifies a fit's data.
std::uint64_t fingerprint(const Dataset& ds);
std::string fingerprint_hex(const Dataset& ds);

/// Train gets order_key <= cutoff, test the rest. Test keeps original ID
/// strings and flags entities that never occur in train.
std::pair<Dataset, Dataset> chronological_split(const Dataset& ds, double cutoff);

struct SummaryReport {
    std::size_t n_total = 0;
    int n_candidates = 0;
    int n_interviewers = 0;
    std::vector<std::pair<std::string, std::size_t>> per_round;
    std::vector<std::size_t> per_grade;  // index 0 -> grade 1
};

SummaryReport summarize(const Dataset& ds);

struct SynthConfig {
    int candidates = 40;
    int interviewers = 12;
    int rounds = 3;
    int k_categories = 4;
    int observations = 800;
    std::uint64_t seed = 0;

    double mu0 = 0.0;
    double sigma_alpha = 0.5;
    double sigma_beta = 0.5;
    double sigma_gamma = 0.5;
    double sigma_delta = 0.5;
    double sigma = 0.5;    // ordinal noise
    double sigma_c = 0.25;  // candidate-side latent noise
    double sigma_i = 0.25;  // interviewer-side latent noise

    /// Per-candidate probability of stopping after each round; produces the
    /// decreasing per-round counts seen in real funnels.
    double stop_prob = 0.5;

    /// Optional per-round shift added to the delta draws (length R).
    std::vector<double> delta_round_means;

    /// When set, every interviewer gets these interior thresholds (length K-3)
    /// instead of ordered-uniform draws. Test hook.
    std::vector<double> fixed_interior_thresholds;

    /// Emit a hired column with hired := (alpha_c > 0).
    bool simulate_hired = false;
};

struct SyntheticTruth {
    double mu0 = 0.0;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::map<std::pair<int, int>, double> gamma;  // (candidate, round)
    std::map<std::pair<int, int>, double> delta;  // (interviewer, round)
    double sigma_alpha = 0.0, sigma_beta = 0.0, sigma_gamma = 0.0, sigma_delta = 0.0;
    double sigma = 0.0, sigma_c = 0.0, sigma_i = 0.0;
    std::vector<double> delta_round_means;
    /// Full cut vectors, endpoints fixed at -1 and +1, strictly increasing.
    std::vector<std::vector<double>> thresholds;

    double sigma_total() const;
};

/// Draws truths from the generative hierarchy, assigns candidates to rounds by
/// stop-probability progression, grades each interview through the marginalized
/// ordered-probit cells, and emits rows sorted by synthetic interview time.
/// Deterministic given cfg.seed.
std::pair<Dataset, SyntheticTruth> generate_synthetic(const SynthConfig& cfg);

}  // namespace bhopm
