// Command-line front end: matrix verification, order detection, group
// closure, the construction families, and the exhaustive small-n scans.
// Matrix I/O uses the text format (rows of space-separated integers, blank
// line terminates) or the structured JSON format {"n":..., "entries":[...]};
// input format is sniffed. Output is text or structured (--format), and
// structured reports are deterministic.

#include <cstdio>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "asmg/asm_matrix.hpp"
#include "asmg/constructions.hpp"
#include "asmg/enumerate.hpp"
#include "asmg/group.hpp"
#include "asmg/io.hpp"
#include "asmg/matrix.hpp"
#include "asmg/order.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
    int order_cap = 64;
    asmg::Int magnitude_bound = 1'000'000'000;
    int closure_max = 256;
    int jobs = 0;  // 0 -> logical CPU count
    std::string format = "text";

    bool structured() const { return format == "structured"; }
    asmg::OrderBounds order_bounds() const { return {order_cap, magnitude_bound}; }
    int effective_jobs() const {
        if (jobs > 0) return jobs;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }
};

/// Writes through a temporary and renames on success, so an interrupted run
/// leaves no partial output file behind.
class AtomicFile {
public:
    explicit AtomicFile(std::string path) : path_(std::move(path)), tmp_(path_ + ".tmp"), out_(tmp_) {
        if (!out_) throw asmg::ParseError("cannot open '" + path_ + "' for writing");
    }
    ~AtomicFile() {
        if (!committed_) std::remove(tmp_.c_str());
    }
    std::ostream& stream() { return out_; }
    void commit() {
        out_.close();
        if (std::rename(tmp_.c_str(), path_.c_str()) != 0)
            throw asmg::ParseError("cannot finalize '" + path_ + "'");
        committed_ = true;
    }

private:
    std::string path_, tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

asmg::IntMatrix read_one(const std::string& path) {
    if (path.empty() || path == "-") return asmg::read_matrix_any(std::cin);
    std::ifstream in(path);
    if (!in) throw asmg::ParseError("cannot open '" + path + "'");
    return asmg::read_matrix_any(in);
}

std::vector<asmg::IntMatrix> read_many(const std::string& path) {
    if (path.empty() || path == "-") return asmg::read_matrix_list(std::cin);
    std::ifstream in(path);
    if (!in) throw asmg::ParseError("cannot open '" + path + "'");
    return asmg::read_matrix_list(in);
}

asmg::Permutation parse_perm(std::string spec) {
    for (auto& c : spec)
        if (c == ',') c = ' ';
    std::istringstream ss(spec);
    std::vector<int> images;
    int v = 0;
    while (ss >> v) images.push_back(v);
    if (images.empty()) throw asmg::ParseError("empty permutation");
    return asmg::Permutation(std::move(images));
}

json fingerprint_json(const asmg::GroupFingerprint& f) {
    json hist = json::object();
    for (auto [order, count] : f.element_order_histogram) hist[std::to_string(order)] = count;
    return json{{"order", f.order},
                {"abelian", f.abelian},
                {"element_order_histogram", std::move(hist)},
                {"center_size", f.center_size}};
}

std::string fingerprint_text(const asmg::GroupFingerprint& f) {
    std::ostringstream ss;
    ss << "order: " << f.order << ", abelian: " << (f.abelian ? "true" : "false")
       << ", center: " << f.center_size << ", element orders: {";
    bool first = true;
    for (auto [order, count] : f.element_order_histogram) {
        if (!first) ss << ", ";
        ss << order << ": " << count;
        first = false;
    }
    ss << "}";
    return ss.str();
}

void emit(const RunConfig& cfg, const json& structured, const std::string& text,
          std::ostream& out = std::cout) {
    if (cfg.structured())
        out << structured.dump(2) << '\n';
    else
        out << text;
}

const char* reason_name(asmg::NoFiniteOrderReason r) {
    switch (r) {
        case asmg::NoFiniteOrderReason::repeat_not_at_start: return "repeat-not-at-A";
        case asmg::NoFiniteOrderReason::magnitude_exceeded: return "magnitude-exceeded";
        case asmg::NoFiniteOrderReason::cap_exceeded: return "cap-exceeded";
    }
    return "unknown";
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::string& input) {
    const asmg::IntMatrix m = read_one(input);
    const auto violation = asmg::first_asm_violation(m);
    if (violation) {
        json j{{"schema_version", kSchemaVersion},
               {"command", "verify"},
               {"asm", false},
               {"violation", violation->describe()}};
        emit(cfg, j, "asm: false (" + violation->describe() + ")\n", std::cerr);
        return 1;
    }
    const auto a = asmg::Asm::from(m);
    const int r = asmg::rank(m);
    const bool reduced = asmg::is_reduced_form(a);
    const int negatives = asmg::negative_entry_count(a);
    json j{{"schema_version", kSchemaVersion},
           {"command", "verify"},
           {"asm", true},
           {"reduced", reduced},
           {"negatives", negatives},
           {"rank", r},
           {"nullity", m.size() - r}};
    std::ostringstream text;
    text << "asm: true, reduced: " << (reduced ? "true" : "false") << ", negatives: " << negatives
         << ", rank: " << r << ", nullity: " << m.size() - r << '\n';
    emit(cfg, j, text.str());
    return 0;
}

// ---- order -----------------------------------------------------------------

int cmd_order(const RunConfig& cfg, const std::string& input) {
    const asmg::IntMatrix m = read_one(input);
    const auto verdict = asmg::detect_order(m, cfg.order_bounds());
    if (!verdict.is_finite()) {
        json j{{"schema_version", kSchemaVersion},
               {"command", "order"},
               {"finite", false},
               {"reason", reason_name(verdict.reason())}};
        emit(cfg, j, std::string("no finite order (") + reason_name(verdict.reason()) + ")\n");
        return 0;
    }
    const auto& info = verdict.info();
    json j{{"schema_version", kSchemaVersion},
           {"command", "order"},
           {"finite", true},
           {"order", info.order},
           {"rank", info.rank},
           {"nullity", info.nullity},
           {"identity", asmg::matrix_to_json(info.identity)}};
    std::ostringstream text;
    text << "order: " << info.order << ", rank: " << info.rank << ", nullity: " << info.nullity
         << "\nidentity:\n"
         << asmg::matrix_to_text(info.identity);
    emit(cfg, j, text.str());
    return 0;
}

// ---- closure ---------------------------------------------------------------

int cmd_closure(const RunConfig& cfg, const std::string& input) {
    const auto gens = read_many(input);
    auto result = asmg::closure(gens, cfg.closure_max);
    if (std::holds_alternative<asmg::ClosureError>(result)) {
        const auto err = std::get<asmg::ClosureError>(result);
        json j{{"schema_version", kSchemaVersion},
               {"command", "closure"},
               {"group", false},
               {"error", asmg::describe(err)}};
        emit(cfg, j, std::string("closure failed: ") + asmg::describe(err) + "\n");
        return err == asmg::ClosureError::exceeded_max_size ? 2 : 0;
    }
    const auto& g = std::get<asmg::SingularGroup>(result);
    const auto f = asmg::fingerprint(g);
    json cayley = json::array();
    for (const auto& row : g.cayley()) cayley.push_back(row);
    json elements = json::array();
    for (const auto& el : g.elements()) elements.push_back(asmg::matrix_to_json(el));
    json j{{"schema_version", kSchemaVersion},
           {"command", "closure"},
           {"group", true},
           {"fingerprint", fingerprint_json(f)},
           {"identity_index", g.identity_index()},
           {"all_asm", g.all_elements_asm()},
           {"cayley", std::move(cayley)},
           {"elements", std::move(elements)}};
    std::ostringstream text;
    text << "group of order " << g.order() << "\n"
         << fingerprint_text(f) << "\n"
         << "all asm: " << (g.all_elements_asm() ? "true" : "false") << "\n"
         << "identity index: " << g.identity_index() << "\ncayley:\n";
    for (const auto& row : g.cayley()) {
        for (std::size_t i = 0; i < row.size(); ++i) text << (i ? " " : "") << row[i];
        text << '\n';
    }
    emit(cfg, j, text.str());
    return 0;
}

// ---- construct -------------------------------------------------------------

json construct_payload(const asmg::IntMatrix& m, const RunConfig& bounds) {
    const auto verdict = asmg::detect_order(m, bounds.order_bounds());
    const int r = asmg::rank(m);
    const bool is_a = asmg::is_asm(m);
    json j{{"matrix", asmg::matrix_to_json(m)},
           {"asm", is_a},
           {"reduced", is_a ? asmg::is_reduced_form(asmg::Asm::from(m)) : false},
           {"idempotent", asmg::is_idempotent(m)},
           {"rank", r},
           {"nullity", m.size() - r}};
    if (verdict.is_finite())
        j["order"] = verdict.info().order;
    else
        j["order"] = nullptr;
    return j;
}

std::string construct_text(const asmg::IntMatrix& m, const RunConfig& bounds) {
    const auto verdict = asmg::detect_order(m, bounds.order_bounds());
    const int r = asmg::rank(m);
    const bool idem = asmg::is_idempotent(m);
    const bool is_a = asmg::is_asm(m);
    const bool reduced = is_a ? asmg::is_reduced_form(asmg::Asm::from(m)) : false;
    std::ostringstream text;
    text << asmg::matrix_to_text(m) << "\n";
    if (verdict.is_finite())
        text << "order: " << verdict.info().order << ", ";
    else
        text << "order: none (" << reason_name(verdict.reason()) << "), ";
    text << "idempotent: " << (idem ? "true" : "false") << ", rank: " << r
         << ", nullity: " << m.size() - r << ", asm: " << (is_a ? "true" : "false")
         << ", reduced: " << (reduced ? "true" : "false") << '\n';
    return text.str();
}

int emit_constructed(const RunConfig& cfg, const std::string& name, const asmg::IntMatrix& m) {
    json j = construct_payload(m, cfg);
    j["schema_version"] = kSchemaVersion;
    j["command"] = "construct";
    j["form"] = name;
    emit(cfg, j, construct_text(m, cfg));
    return 0;
}

int emit_constructed_pair(const RunConfig& cfg, const std::string& name, const asmg::IntMatrix& a,
                          const asmg::IntMatrix& b) {
    json j{{"schema_version", kSchemaVersion},
           {"command", "construct"},
           {"form", name},
           {"cycle", construct_payload(a, cfg)},
           {"transposition", construct_payload(b, cfg)}};
    emit(cfg, j, construct_text(a, cfg) + construct_text(b, cfg));
    return 0;
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, int n, const std::string& emit_path) {
    std::optional<AtomicFile> emit_file;
    std::ostream* sink = nullptr;
    if (!emit_path.empty()) {
        emit_file.emplace(emit_path);
        sink = &emit_file->stream();
    } else if (!cfg.structured()) {
        sink = &std::cout;
    }

    std::uint64_t count = 0;
    json matrices = json::array();
    const bool collect = cfg.structured() && emit_path.empty();
    asmg::for_each_asm(n, [&](const asmg::IntMatrix& m) {
        ++count;
        if (sink) {
            asmg::write_matrix_text(*sink, m);
            *sink << '\n';
        }
        if (collect) matrices.push_back(asmg::matrix_to_json(m));
    });
    if (emit_file) emit_file->commit();

    json j{{"schema_version", kSchemaVersion}, {"command", "enumerate"}, {"n", n}, {"count", count}};
    if (collect) j["matrices"] = std::move(matrices);
    if (!emit_path.empty()) j["emitted"] = emit_path;
    if (cfg.structured()) {
        std::cout << j.dump(2) << '\n';
    } else if (!emit_path.empty()) {
        std::cout << "count: " << count << '\n';
    } else {
        std::cerr << "count: " << count << '\n';
    }
    return 0;
}

// ---- classify ----------------------------------------------------------

json classification_json(const asmg::ClassificationReport& r) {
    json orders = json::object();
    for (auto [order, count] : r.order_counts) orders[std::to_string(order)] = count;
    json negatives = json::object();
    for (const auto& [order, by_neg] : r.negatives_by_order) {
        json inner = json::object();
        for (auto [neg, count] : by_neg) inner[std::to_string(neg)] = count;
        negatives[std::to_string(order)] = std::move(inner);
    }
    return json{{"schema_version", kSchemaVersion},
                {"command", "classify"},
                {"n", r.n},
                {"total_asms", r.total_asm_count},
                {"singular", r.singular_count},
                {"order_counts", std::move(orders)},
                {"idempotents", r.idempotent_count},
                {"negatives_by_order", std::move(negatives)},
                {"bounded_verdicts", r.bounded_verdicts}};
}

std::string classification_text(const asmg::ClassificationReport& r) {
    std::ostringstream text;
    text << "n: " << r.n << "\ntotal asms: " << r.total_asm_count
         << "\nsingular: " << r.singular_count << "\n\norder  count\n";
    for (auto [order, count] : r.order_counts) text << order << ": " << count << '\n';
    text << "\nnegative entries by order:\n";
    for (const auto& [order, by_neg] : r.negatives_by_order) {
        text << "  order " << order << ":";
        for (auto [neg, count] : by_neg) text << "  " << neg << " negatives x" << count;
        text << '\n';
    }
    if (r.bounded_verdicts)
        text << "warning: " << r.bounded_verdicts << " order searches hit the iteration cap\n";
    return text.str();
}

int cmd_classify(const RunConfig& cfg, int n, const std::string& out_path) {
    const auto report = asmg::classify(n, cfg.effective_jobs());
    const json j = classification_json(report);
    const std::string text = classification_text(report);
    if (!out_path.empty()) {
        AtomicFile out(out_path);
        emit(cfg, j, text, out.stream());
        out.commit();
    }
    emit(cfg, j, text);
    return 0;
}

// ---- atlas -------------------------------------------------------------

int cmd_atlas(const RunConfig& cfg, int n) {
    const auto atlas = asmg::group_atlas(n, cfg.closure_max, cfg.effective_jobs());
    json groups = json::array();
    for (const auto& g : atlas.maximal_groups) {
        json elements = json::array();
        for (const auto& el : g.elements()) elements.push_back(asmg::matrix_to_json(el));
        groups.push_back(json{{"fingerprint", fingerprint_json(asmg::fingerprint(g))},
                              {"identity_index", g.identity_index()},
                              {"elements", std::move(elements)}});
    }
    json j{{"schema_version", kSchemaVersion},
           {"command", "atlas"},
           {"n", n},
           {"max_group_order", atlas.max_group_order},
           {"group_orders", atlas.subgroup_orders},
           {"nonabelian_group_orders", atlas.nonabelian_subgroup_orders},
           {"maximal_groups", std::move(groups)}};
    std::ostringstream text;
    text << "n: " << n << "\nmaximal groups: " << atlas.maximal_groups.size()
         << "\nmax group order: " << atlas.max_group_order << "\ngroup orders:";
    for (int o : atlas.subgroup_orders) text << ' ' << o;
    text << "\nnon-abelian group orders:";
    for (int o : atlas.nonabelian_subgroup_orders) text << ' ' << o;
    text << "\n\nmaximal groups:\n";
    for (const auto& g : atlas.maximal_groups)
        text << "  " << fingerprint_text(asmg::fingerprint(g)) << '\n';
    emit(cfg, j, text.str());
    return 0;
}

// ---- census ------------------------------------------------------------

int cmd_census(const RunConfig& cfg, int n) {
    const auto idems = asmg::idempotent_census(n, cfg.effective_jobs());
    const auto roots = asmg::square_root_census(n, cfg.effective_jobs());
    json idem_json = json::array();
    for (const auto& rec : idems) {
        idem_json.push_back(json{{"matrix", asmg::matrix_to_json(rec.matrix.matrix())},
                                 {"reduced", asmg::matrix_to_json(rec.reduced.matrix())},
                                 {"deleted_indices", rec.deleted_indices},
                                 {"nullity", rec.nullity}});
    }
    json root_json = json::array();
    for (const auto& entry : roots) {
        json rs = json::array();
        for (const auto& r : entry.roots) rs.push_back(asmg::matrix_to_json(r.matrix()));
        root_json.push_back(json{{"idempotent", asmg::matrix_to_json(entry.idempotent.matrix())},
                                 {"square_roots", std::move(rs)}});
    }
    json j{{"schema_version", kSchemaVersion},
           {"command", "census"},
           {"n", n},
           {"idempotent_count", idems.size()},
           {"idempotents", std::move(idem_json)},
           {"square_roots", std::move(root_json)}};
    std::ostringstream text;
    text << "n: " << n << "\nidempotents: " << idems.size() << '\n';
    for (std::size_t i = 0; i < idems.size(); ++i) {
        text << "\nidempotent " << i + 1 << " (nullity " << idems[i].nullity << ", deleted:";
        if (idems[i].deleted_indices.empty()) text << " none";
        for (int d : idems[i].deleted_indices) text << ' ' << d;
        text << ", square roots: " << roots[i].roots.size() << ")\n"
             << asmg::matrix_to_text(idems[i].matrix.matrix());
    }
    emit(cfg, j, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for multiplicative groups of singular alternating sign matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--order-cap", cfg.order_cap, "power iteration cap for order detection")
        ->envname("ASMG_ORDER_CAP")
        ->check(CLI::PositiveNumber);
    app.add_option("--magnitude-bound", cfg.magnitude_bound,
                   "entry magnitude bound for order detection")
        ->envname("ASMG_MAGNITUDE_BOUND")
        ->check(CLI::PositiveNumber);
    app.add_option("--closure-max", cfg.closure_max, "maximum closure size")
        ->envname("ASMG_CLOSURE_MAX")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads for the exhaustive scans")
        ->envname("ASMG_JOBS")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->envname("ASMG_FORMAT")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string input = "-";
    std::string out_path, emit_path, left_path, right_path, base_path;
    std::string perm_spec, variant_spec = "A", family = "n-plus-4";
    int n = 0, k = 0, center_row = 0, center_col = 0;

    auto* verify = app.add_subcommand("verify", "check the ASM conditions and report statistics");
    verify->add_option("input", input, "matrix file ('-' for stdin)");

    auto* order = app.add_subcommand("order", "detect the finite multiplicative order");
    order->add_option("input", input, "matrix file ('-' for stdin)");

    auto* closure_cmd = app.add_subcommand("closure", "close a generator list into a group");
    closure_cmd->add_option("input", input, "matrix list file ('-' for stdin)");

    auto* construct = app.add_subcommand("construct", "build the construction families");
    construct->require_subcommand(1);
    auto* frame = construct->add_subcommand("frame", "frame a permutation block");
    frame->add_option("--perm", perm_spec, "one-line permutation, e.g. '2 3 1'")->required();
    frame->add_option("--variant", variant_spec, "corner pattern")
        ->check(CLI::IsMember({"A", "B"}));
    auto* ek = construct->add_subcommand("ek", "alternating idempotent of index k");
    ek->add_option("--k", k, "index k >= 1")->required()->check(CLI::PositiveNumber);
    auto* symn = construct->add_subcommand("symn", "symmetric group generators");
    symn->add_option("--n", n, "degree n >= 1")->required()->check(CLI::PositiveNumber);
    symn->add_option("--family", family, "construction family")
        ->check(CLI::IsMember({"n-plus-4", "low-rank"}));
    auto* theta = construct->add_subcommand("theta", "embed an odd-index-fixing permutation");
    theta->add_option("--k", k, "idempotent index k >= 1")->required()->check(CLI::PositiveNumber);
    theta->add_option("--perm", perm_spec,
                      "one-line permutation of 1..4k+1 fixing odd indices, or of 1..2k")
        ->required();
    auto* kron_sub = construct->add_subcommand("kron", "Kronecker product of two matrices");
    kron_sub->add_option("--left", left_path, "left matrix file")->required();
    kron_sub->add_option("--right", right_path, "right matrix file")->required();
    auto* expand = construct->add_subcommand("expand-center", "replace the central block");
    expand->add_option("--base", base_path, "framed ASM file")->required();
    expand->add_option("--perm", perm_spec, "new central permutation")->required();
    expand->add_option("--center-row", center_row, "1-based row of the 1x1 center (default: middle)");
    expand->add_option("--center-col", center_col, "1-based column of the 1x1 center (default: middle)");

    auto* enumerate = app.add_subcommand("enumerate", "stream every n x n ASM");
    enumerate->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--emit", emit_path, "write the matrix stream to a file");

    auto* classify = app.add_subcommand("classify", "classify singular finite-order ASMs");
    classify->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);
    classify->add_option("--out", out_path, "also write the report to a file");

    auto* atlas = app.add_subcommand("atlas", "maximal groups of singular ASMs");
    atlas->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);

    auto* census = app.add_subcommand("census", "idempotents and their square roots");
    census->add_option("--n", n, "size")->required()->check(CLI::PositiveNumber);

    auto* kron_top = app.add_subcommand("kron", "Kronecker product of two matrices");
    kron_top->add_option("--left", left_path, "left matrix file")->required();
    kron_top->add_option("--right", right_path, "right matrix file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(cfg, input);
        if (order->parsed()) return cmd_order(cfg, input);
        if (closure_cmd->parsed()) return cmd_closure(cfg, input);
        if (construct->parsed()) {
            if (frame->parsed()) {
                const auto p = parse_perm(perm_spec);
                const auto v = variant_spec == "A" ? asmg::FrameVariant::A : asmg::FrameVariant::B;
                return emit_constructed(cfg, "frame", asmg::build_frame(p, v).matrix());
            }
            if (ek->parsed())
                return emit_constructed(cfg, "ek", asmg::alternating_idempotent(k).matrix());
            if (symn->parsed()) {
                if (family == "n-plus-4") {
                    const auto [s, t] = asmg::symmetric_group_frame_generators(n);
                    return emit_constructed_pair(cfg, "symn", s.matrix(), t.matrix());
                }
                const auto [s, t] = asmg::symmetric_group_low_rank_generators(n);
                return emit_constructed_pair(cfg, "symn", s.matrix(), t.matrix());
            }
            if (theta->parsed()) {
                auto p = parse_perm(perm_spec);
                if (p.size() != 4 * k + 1) p = asmg::even_index_permutation(p, k);
                return emit_constructed(cfg, "theta", asmg::odd_fixing_embed(p, k).matrix());
            }
            if (kron_sub->parsed()) {
                const auto product = asmg::kronecker(read_one(left_path), read_one(right_path));
                return emit_constructed(cfg, "kron", product);
            }
            if (expand->parsed()) {
                auto base = asmg::Asm::from(read_one(base_path));
                const int r = center_row > 0 ? center_row : (base.size() + 1) / 2;
                const int c = center_col > 0 ? center_col : (base.size() + 1) / 2;
                auto framed = asmg::FramedAsm::around_center(std::move(base), r, c);
                const auto expanded = asmg::expand_center(framed, parse_perm(perm_spec));
                return emit_constructed(cfg, "expand-center", expanded.matrix());
            }
        }
        if (enumerate->parsed()) return cmd_enumerate(cfg, n, emit_path);
        if (classify->parsed()) return cmd_classify(cfg, n, out_path);
        if (atlas->parsed()) return cmd_atlas(cfg, n);
        if (census->parsed()) return cmd_census(cfg, n);
        if (kron_top->parsed()) {
            const auto product = asmg::kronecker(read_one(left_path), read_one(right_path));
            return emit_constructed(cfg, "kron", product);
        }
    } catch (const asmg::ResourceGuardError& ex) {
        std::cerr << "refused: " << ex.what() << '\n';
        return 2;
    } catch (const asmg::ParseError& ex) {
        std::cerr << "input error: " << ex.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input error: " << ex.what() << '\n';
        return 1;
    } catch (const std::overflow_error& ex) {
        std::cerr << "overflow: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
