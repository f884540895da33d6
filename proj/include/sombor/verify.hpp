#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/bounds.hpp"
#include "sombor/graph.hpp"

namespace sombor {

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// All 2^(n(n-1)/2) labeled graphs on n vertices.
///
/// Graph k contains pair i of the column-wise upper triangle iff bit
/// (E-1-i) of k is set, so iteration runs in lexicographic bit-vector order
/// with (0,1) as the most significant position.
class LabeledGraphs {
  public:
    /// Throws GraphError unless 1 <= n <= kMaxEnumerationOrder.
    explicit LabeledGraphs(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
    Graph at(std::uint64_t index) const;

    class iterator {
      public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const LabeledGraphs* owner, std::uint64_t index) : owner_(owner), index_(index) {}

        Graph operator*() const { return owner_->at(index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++index_;
            return copy;
        }
        friend bool operator==(const iterator& a, const iterator& b) noexcept {
            return a.index_ == b.index_;
        }

      private:
        const LabeledGraphs* owner_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count()}; }

  private:
    std::size_t n_;
    std::vector<Edge> pairs_;
};

inline LabeledGraphs enumerate_graphs(std::size_t n) { return LabeledGraphs(n); }

/// G(n, p): each pair included independently with probability p, pairs
/// visited in graph6 order. Deterministic for a fixed seed.
/// Throws std::invalid_argument unless 0 <= p <= 1.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

struct VerificationRecord {
    std::string g1;  // graph6
    std::string g2;  // graph6
    BoundKind kind = BoundKind::eso_join;
    FormulaVariant variant = FormulaVariant::proof_conclusion;
    double true_value = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    bool lower_ok = false;
    bool upper_ok = false;
    double gap_lower = 0.0;
    double gap_upper = 0.0;
    // Not serialized; used by sweep summaries.
    bool isolated = false;  // some factor has δ = 0
    std::optional<double> printed_regular;  // printed_proposition() when both factors are regular

    bool ok() const noexcept { return lower_ok && upper_ok; }
};

/// Absolute slack allowed when comparing against `value`: max(1e-12, rel·|value|).
double check_tolerance(double value, double relative) noexcept;

/// Fills the bound, flag and gap fields of a record from its true value.
void evaluate_record(VerificationRecord& rec, const BoundPair& bp, double relative_tolerance);

/// Builds each needed product once and emits one record per requested
/// (kind, variant). The statement variant is skipped for kinds where it
/// coincides with the corrected formula.
std::vector<VerificationRecord> verify_pair(const Graph& g1, const Graph& g2,
                                            std::span<const BoundKind> kinds,
                                            std::span<const FormulaVariant> variants,
                                            double relative_tolerance = 1e-9);

enum class SweepMode { exhaustive, random };

struct SweepConfig {
    std::size_t max_order_1 = 4;
    std::size_t max_order_2 = 4;
    SweepMode mode = SweepMode::exhaustive;
    std::size_t sample_count = 1000;
    std::uint64_t rng_seed = 0;
    double tolerance = 1e-9;
    std::vector<BoundKind> kinds{std::begin(kAllBoundKinds), std::end(kAllBoundKinds)};
    std::vector<FormulaVariant> variants{FormulaVariant::proof_conclusion};

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

struct StreamSummary {
    BoundKind kind = BoundKind::eso_join;
    FormulaVariant variant = FormulaVariant::proof_conclusion;
    std::uint64_t pairs = 0;
    std::uint64_t failures = 0;
    std::uint64_t lower_failures = 0;
    std::uint64_t upper_failures = 0;
    std::uint64_t isolated_pairs = 0;
    std::uint64_t isolated_failures = 0;
    std::uint64_t regular_pairs = 0;
    std::uint64_t printed_proposition_mismatches = 0;
    // Relative gaps gap/true_value over passing records.
    double min_rel_gap_lower = 0.0;
    double min_rel_gap_upper = 0.0;
    double mean_rel_gap_lower = 0.0;
    double mean_rel_gap_upper = 0.0;
    std::optional<std::pair<std::string, std::string>> first_counterexample;

    void add(const VerificationRecord& rec, double relative_tolerance);

  private:
    std::uint64_t gap_samples_ = 0;
    double sum_rel_gap_lower_ = 0.0;
    double sum_rel_gap_upper_ = 0.0;
};

struct SweepSummary {
    SweepConfig config;
    std::vector<StreamSummary> streams;  // one per evaluated (kind, variant)

    /// Failures on proof-conclusion (corrected) formulas only.
    std::uint64_t corrected_failures() const noexcept;
    const StreamSummary* find(BoundKind kind, FormulaVariant variant) const noexcept;
};

using RecordSink = std::function<void(const VerificationRecord&)>;

/// Visits every pair (exhaustive: orders 1..max × 1..max, enumeration order;
/// random: sample_count seeded pairs) and reports each record to `sink` in a
/// deterministic order.
SweepSummary run_sweep(const SweepConfig& cfg, const RecordSink& sink = {});

std::string_view to_string(SweepMode mode) noexcept;

// Record streams. Column / field names:
// g1,g2,kind,variant,true_value,alpha1,alpha2,lower_ok,upper_ok,gap_lower,gap_upper
// Reals are written with 17 significant digits so values round-trip.
enum class RecordFormat { csv, jsonl };

void write_csv_header(std::ostream& out);
void write_csv_record(std::ostream& out, const VerificationRecord& rec);
void write_jsonl_record(std::ostream& out, const VerificationRecord& rec);

/// Writes the stream preamble on construction (a "# ..." config line and the
/// column header for CSV; a {"sweep_config": ...} line for JSON-lines), then
/// one line per record.
class RecordWriter {
  public:
    RecordWriter(std::ostream& out, RecordFormat format, const SweepConfig& cfg);
    void operator()(const VerificationRecord& rec);

  private:
    std::ostream* out_;
    RecordFormat format_;
};

std::string summary_to_json(const SweepSummary& summary, int indent = 2);

}  // namespace sombor
