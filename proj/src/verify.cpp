#include "sombor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "sombor/graph6.hpp"
#include "sombor/indices.hpp"
#include "sombor/products.hpp"

namespace sombor {

using ojson = nlohmann::ordered_json;

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw GraphError("enumeration order " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxEnumerationOrder));
    }
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) pairs_.push_back({u, v});
    }
}

Graph LabeledGraphs::at(std::uint64_t index) const {
    if (index >= count()) throw std::out_of_range("graph index " + std::to_string(index) + " out of range");
    const std::size_t e = pairs_.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < e; ++i) {
        if ((index >> (e - 1 - i)) & 1u) edges.push_back(pairs_[i]);
    }
    return Graph::from_edges(n_, edges);
}

namespace {

double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::mt19937_64 seeded_engine(std::initializer_list<std::uint64_t> words) {
    std::vector<std::uint32_t> parts;
    for (std::uint64_t w : words) {
        parts.push_back(static_cast<std::uint32_t>(w));
        parts.push_back(static_cast<std::uint32_t>(w >> 32));
    }
    std::seed_seq seq(parts.begin(), parts.end());
    return std::mt19937_64(seq);
}

}  // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    auto rng = seeded_engine({seed});
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (unit_interval(rng) < p) edges.push_back({u, v});
        }
    }
    return Graph::from_edges(n, edges);
}

double check_tolerance(double value, double relative) noexcept {
    return std::max(1e-12, relative * std::abs(value));
}

void evaluate_record(VerificationRecord& rec, const BoundPair& bp, double relative_tolerance) {
    rec.kind = bp.kind;
    rec.variant = bp.variant;
    rec.alpha1 = bp.alpha1;
    rec.alpha2 = bp.alpha2;
    const double tol = check_tolerance(rec.true_value, relative_tolerance);
    rec.lower_ok = rec.alpha1 <= rec.true_value + tol;
    rec.upper_ok = rec.true_value <= rec.alpha2 + tol;
    rec.gap_lower = rec.true_value - rec.alpha1;
    rec.gap_upper = rec.alpha2 - rec.true_value;
    if (rec.lower_ok) rec.gap_lower = std::max(0.0, rec.gap_lower);
    if (rec.upper_ok) rec.gap_upper = std::max(0.0, rec.gap_upper);
}

namespace {

struct Factor {
    const Graph* graph;
    std::string g6;
    GraphParams params;
};

Factor make_factor(const Graph& g) { return {&g, write_graph6(g), params_of(g)}; }

bool selected(FormulaVariant v, std::span<const FormulaVariant> variants) {
    return std::find(variants.begin(), variants.end(), v) != variants.end();
}

/// The (kind, variant) streams a configuration evaluates, in output order.
std::vector<std::pair<BoundKind, FormulaVariant>> streams_of(std::span<const BoundKind> kinds,
                                                             std::span<const FormulaVariant> variants) {
    std::vector<std::pair<BoundKind, FormulaVariant>> out;
    for (BoundKind k : kinds) {
        for (FormulaVariant v : {FormulaVariant::proof_conclusion, FormulaVariant::statement}) {
            if (!selected(v, variants)) continue;
            if (v == FormulaVariant::statement && !has_distinct_statement(k)) continue;
            out.emplace_back(k, v);
        }
    }
    return out;
}

template <typename Emit>
void verify_factors(const Factor& a, const Factor& b,
                    std::span<const std::pair<BoundKind, FormulaVariant>> streams, double tolerance,
                    Emit&& emit) {
    std::optional<Graph> joined;
    std::optional<Graph> crowned;
    const bool regular = a.params.is_regular() && b.params.is_regular();
    for (const auto& [kind, variant] : streams) {
        auto& slot = product_kind(kind) == ProductKind::join ? joined : crowned;
        if (!slot) slot = product(product_kind(kind), *a.graph, *b.graph);

        VerificationRecord rec;
        rec.g1 = a.g6;
        rec.g2 = b.g6;
        const bool elliptic = kind == BoundKind::eso_join || kind == BoundKind::eso_corona;
        rec.true_value = elliptic ? elliptic_sombor(*slot) : euler_sombor(*slot);
        evaluate_record(rec, bounds_for(kind, a.params, b.params, variant), tolerance);
        rec.isolated = a.params.min_deg == 0 || b.params.min_deg == 0;
        if (regular) rec.printed_regular = printed_proposition(kind, a.params, b.params);
        emit(std::move(rec));
    }
}

}  // namespace

std::vector<VerificationRecord> verify_pair(const Graph& g1, const Graph& g2, std::span<const BoundKind> kinds,
                                            std::span<const FormulaVariant> variants, double relative_tolerance) {
    const Factor a = make_factor(g1);
    const Factor b = make_factor(g2);
    std::vector<VerificationRecord> out;
    const auto streams = streams_of(kinds, variants);
    verify_factors(a, b, streams, relative_tolerance, [&](VerificationRecord&& r) { out.push_back(std::move(r)); });
    return out;
}

void SweepConfig::validate() const {
    if (max_order_1 < 1 || max_order_2 < 1) throw std::invalid_argument("maximum orders must be at least 1");
    if (mode == SweepMode::exhaustive &&
        (max_order_1 > kMaxEnumerationOrder || max_order_2 > kMaxEnumerationOrder)) {
        throw std::invalid_argument("exhaustive sweeps support orders up to " +
                                    std::to_string(kMaxEnumerationOrder));
    }
    if (max_order_1 > kGraph6MaxOrder || max_order_2 > kGraph6MaxOrder) {
        throw std::invalid_argument("maximum order exceeds the graph6 limit");
    }
    if (mode == SweepMode::random && sample_count < 1) {
        throw std::invalid_argument("random sweeps need at least one sample");
    }
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw std::invalid_argument("tolerance must be a positive finite number");
    }
    if (kinds.empty()) throw std::invalid_argument("no bound kinds selected");
    if (variants.empty()) throw std::invalid_argument("no formula variants selected");
    if (streams_of(kinds, variants).empty()) {
        throw std::invalid_argument("the statement variant differs from the corrected formula only for eu-join");
    }
}

void StreamSummary::add(const VerificationRecord& rec, double relative_tolerance) {
    ++pairs;
    if (rec.isolated) ++isolated_pairs;
    if (!rec.lower_ok) ++lower_failures;
    if (!rec.upper_ok) ++upper_failures;
    if (!rec.ok()) {
        ++failures;
        if (rec.isolated) ++isolated_failures;
        if (!first_counterexample) first_counterexample.emplace(rec.g1, rec.g2);
    }
    if (rec.printed_regular) {
        ++regular_pairs;
        if (std::abs(*rec.printed_regular - rec.true_value) > check_tolerance(rec.true_value, relative_tolerance)) {
            ++printed_proposition_mismatches;
        }
    }
    if (rec.ok() && rec.true_value > 0.0) {
        const double lo = rec.gap_lower / rec.true_value;
        const double hi = rec.gap_upper / rec.true_value;
        if (gap_samples_ == 0) {
            min_rel_gap_lower = lo;
            min_rel_gap_upper = hi;
        } else {
            min_rel_gap_lower = std::min(min_rel_gap_lower, lo);
            min_rel_gap_upper = std::min(min_rel_gap_upper, hi);
        }
        ++gap_samples_;
        sum_rel_gap_lower_ += lo;
        sum_rel_gap_upper_ += hi;
        mean_rel_gap_lower = sum_rel_gap_lower_ / static_cast<double>(gap_samples_);
        mean_rel_gap_upper = sum_rel_gap_upper_ / static_cast<double>(gap_samples_);
    }
}

std::uint64_t SweepSummary::corrected_failures() const noexcept {
    std::uint64_t total = 0;
    for (const auto& s : streams) {
        if (s.variant == FormulaVariant::proof_conclusion) total += s.failures;
    }
    return total;
}

const StreamSummary* SweepSummary::find(BoundKind kind, FormulaVariant variant) const noexcept {
    for (const auto& s : streams) {
        if (s.kind == kind && s.variant == variant) return &s;
    }
    return nullptr;
}

SweepSummary run_sweep(const SweepConfig& cfg, const RecordSink& sink) {
    cfg.validate();
    SweepSummary summary;
    summary.config = cfg;
    const auto streams = streams_of(cfg.kinds, cfg.variants);
    for (const auto& [kind, variant] : streams) {
        StreamSummary s;
        s.kind = kind;
        s.variant = variant;
        summary.streams.push_back(s);
    }

    auto emit = [&](VerificationRecord&& rec) {
        for (auto& s : summary.streams) {
            if (s.kind == rec.kind && s.variant == rec.variant) s.add(rec, cfg.tolerance);
        }
        if (sink) sink(rec);
    };

    if (cfg.mode == SweepMode::exhaustive) {
        const std::size_t top = std::max(cfg.max_order_1, cfg.max_order_2);
        std::vector<std::vector<Graph>> graphs(top + 1);
        std::vector<std::vector<Factor>> factors(top + 1);
        for (std::size_t n = 1; n <= top; ++n) {
            const LabeledGraphs all(n);
            graphs[n].assign(all.begin(), all.end());
            for (const Graph& g : graphs[n]) factors[n].push_back(make_factor(g));
        }
        for (std::size_t n1 = 1; n1 <= cfg.max_order_1; ++n1) {
            for (const Factor& a : factors[n1]) {
                for (std::size_t n2 = 1; n2 <= cfg.max_order_2; ++n2) {
                    for (const Factor& b : factors[n2]) verify_factors(a, b, streams, cfg.tolerance, emit);
                }
            }
        }
    } else {
        for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
            auto rng = seeded_engine({cfg.rng_seed, i});
            const std::size_t n1 = 1 + rng() % cfg.max_order_1;
            const double p1 = unit_interval(rng);
            const Graph g1 = random_graph(n1, p1, rng());
            const std::size_t n2 = 1 + rng() % cfg.max_order_2;
            const double p2 = unit_interval(rng);
            const Graph g2 = random_graph(n2, p2, rng());
            verify_factors(make_factor(g1), make_factor(g2), streams, cfg.tolerance, emit);
        }
    }
    return summary;
}

std::string_view to_string(SweepMode mode) noexcept {
    return mode == SweepMode::exhaustive ? "exhaustive" : "random";
}

namespace {

std::string real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* flag(bool b) { return b ? "true" : "false"; }

ojson config_json(const SweepConfig& cfg) {
    ojson j;
    j["mode"] = to_string(cfg.mode);
    j["max_order_1"] = cfg.max_order_1;
    j["max_order_2"] = cfg.max_order_2;
    if (cfg.mode == SweepMode::random) j["sample_count"] = cfg.sample_count;
    j["rng_seed"] = cfg.rng_seed;
    j["tolerance"] = cfg.tolerance;
    j["kinds"] = ojson::array();
    for (BoundKind k : cfg.kinds) j["kinds"].push_back(to_string(k));
    j["variants"] = ojson::array();
    for (FormulaVariant v : cfg.variants) j["variants"].push_back(to_string(v));
    return j;
}

}  // namespace

void write_csv_header(std::ostream& out) {
    out << "g1,g2,kind,variant,true_value,alpha1,alpha2,lower_ok,upper_ok,gap_lower,gap_upper\n";
}

void write_csv_record(std::ostream& out, const VerificationRecord& rec) {
    // graph6 bytes lie in 63..126, so no field ever needs quoting.
    out << rec.g1 << ',' << rec.g2 << ',' << to_string(rec.kind) << ',' << to_string(rec.variant) << ','
        << real(rec.true_value) << ',' << real(rec.alpha1) << ',' << real(rec.alpha2) << ',' << flag(rec.lower_ok)
        << ',' << flag(rec.upper_ok) << ',' << real(rec.gap_lower) << ',' << real(rec.gap_upper) << '\n';
}

void write_jsonl_record(std::ostream& out, const VerificationRecord& rec) {
    ojson j;
    j["g1"] = rec.g1;
    j["g2"] = rec.g2;
    j["kind"] = to_string(rec.kind);
    j["variant"] = to_string(rec.variant);
    j["true_value"] = rec.true_value;
    j["alpha1"] = rec.alpha1;
    j["alpha2"] = rec.alpha2;
    j["lower_ok"] = rec.lower_ok;
    j["upper_ok"] = rec.upper_ok;
    j["gap_lower"] = rec.gap_lower;
    j["gap_upper"] = rec.gap_upper;
    out << j.dump() << '\n';
}

RecordWriter::RecordWriter(std::ostream& out, RecordFormat format, const SweepConfig& cfg)
    : out_(&out), format_(format) {
    if (format_ == RecordFormat::csv) {
        *out_ << "# " << config_json(cfg).dump() << '\n';
        write_csv_header(*out_);
    } else {
        *out_ << ojson{{"sweep_config", config_json(cfg)}}.dump() << '\n';
    }
}

void RecordWriter::operator()(const VerificationRecord& rec) {
    if (format_ == RecordFormat::csv) {
        write_csv_record(*out_, rec);
    } else {
        write_jsonl_record(*out_, rec);
    }
}

std::string summary_to_json(const SweepSummary& summary, int indent) {
    ojson j;
    j["config"] = config_json(summary.config);
    j["corrected_failures"] = summary.corrected_failures();
    j["streams"] = ojson::array();
    for (const auto& s : summary.streams) {
        ojson e;
        e["kind"] = to_string(s.kind);
        e["variant"] = to_string(s.variant);
        e["pairs"] = s.pairs;
        e["failures"] = s.failures;
        e["lower_failures"] = s.lower_failures;
        e["upper_failures"] = s.upper_failures;
        e["min_rel_gap_lower"] = s.min_rel_gap_lower;
        e["mean_rel_gap_lower"] = s.mean_rel_gap_lower;
        e["min_rel_gap_upper"] = s.min_rel_gap_upper;
        e["mean_rel_gap_upper"] = s.mean_rel_gap_upper;
        e["isolated_vertex_pairs"] = s.isolated_pairs;
        e["isolated_vertex_failures"] = s.isolated_failures;
        e["regular_pairs"] = s.regular_pairs;
        e["printed_proposition_mismatches"] = s.printed_proposition_mismatches;
        if (s.first_counterexample) {
            e["first_counterexample"] = {{"g1", s.first_counterexample->first},
                                         {"g2", s.first_counterexample->second}};
        } else {
            e["first_counterexample"] = nullptr;
        }
        j["streams"].push_back(std::move(e));
    }
    return j.dump(indent);
}

}  // namespace sombor
