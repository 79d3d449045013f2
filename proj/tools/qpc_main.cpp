// qpc: exact partition calculus for the inclusion S_N <= S_N^+.
// Every subcommand prints a JSON run report on stdout; --pretty indents it.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "qpc/dense.hpp"
#include "qpc/error.hpp"
#include "qpc/generation.hpp"
#include "qpc/hyperplane.hpp"
#include "qpc/json_io.hpp"
#include "qpc/moment.hpp"
#include "qpc/weingarten.hpp"

using json = nlohmann::json;
using namespace qpc;

namespace {

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
    bool pretty = false;
    int threads = 0;
    size_t budget_bytes = kDefaultDenseBudget * 16;
    size_t budget_entries() const { return std::max<size_t>(1, budget_bytes / 16); }
};

void emit(const GlobalOpts& g, const std::string& command, const json& params, json payload,
          std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json report{
        {"command", command},
        {"parameters", params},
        {"result", std::move(payload)},
        {"elapsed_ms", ms},
        {"version", kVersion},
    };
    if (g.pretty) std::cout << report.dump(2) << std::endl;
    else std::cout << report.dump() << std::endl;
}

std::vector<int> parse_tuple(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

json report_json(const MomentMatrixReport& rep) {
    json kernel = json::array();
    for (const auto& v : rep.kernel_basis) {
        json vec = json::array();
        for (const auto& p : v) vec.push_back(to_json(p));
        kernel.push_back(std::move(vec));
    }
    json sweep = json::object();
    for (const auto& [n, r] : rep.rank_at_n) sweep[std::to_string(n)] = r;
    json cols = json::array();
    for (const auto& p : rep.columns) cols.push_back(p.str());
    return json{
        {"matrix_shape", {rep.matrix.rows(), rep.matrix.cols()}},
        {"columns", cols},
        {"generic_rank", rep.generic_rank},
        {"kernel_dim", static_cast<int>(rep.kernel_basis.size())},
        {"kernel_basis", kernel},
        {"kernel_degrees", rep.kernel_degrees},
        {"sweep", sweep},
    };
}

std::vector<std::array<PolyN, 5>> kernel_rows(const K6Report& rep) {
    if (rep.base.kernel_basis.size() != 5)
        throw std::logic_error("expected a five-dimensional kernel");
    std::vector<std::array<PolyN, 5>> rows(rep.base.columns.size());
    for (size_t j = 0; j < rows.size(); ++j)
        for (int i = 0; i < 5; ++i) rows[j][i] = rep.base.kernel_basis[i][j];
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact diagram combinatorics, moment-matrix certificates and Weingarten moments for S_N inside S_N^+"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_flag("--pretty", g.pretty, "indent the JSON output");
    app.add_option("--threads", g.threads, "worker threads (default: machine parallelism)");
    app.add_option("--budget-bytes", g.budget_bytes, "memory budget for dense expansions");

    // enumerate
    auto* c_enum = app.add_subcommand(
        "enumerate", "list partitions of {1..k}; counts: Bell(k), Catalan(k), Bell-Catalan "
                     "(10 at k=5, 71 at k=6)");
    int e_k = 0;
    std::string e_filter = "all";
    c_enum->add_option("--k", e_k, "point count")->required();
    c_enum->add_option("--filter", e_filter, "all | noncrossing | crossing");

    // crossings
    auto* c_cross = app.add_subcommand(
        "crossings", "crossing quadruples k1<k2<k3<k4 of a partition, e.g. two crossings "
                     "(5,6,7,9),(5,6,7,10) for {1}{2,3}{4}{5,7}{6,9,10}{8}");
    std::string x_partition;
    c_cross->add_option("partition", x_partition, "partition text, block or rgs form")->required();

    // moment5
    auto* c_m5 = app.add_subcommand(
        "moment5", "10x10 level-5 matrix: |det| = (N-4)(N^2-3N+1)^2; at N=4 rank 9 with "
                   "kernel eta (+1 on 3-block, -2 on 2-block crossings), eta inside the "
                   "noncrossing span");
    bool m5_det = false, m5_kernel = false;
    int m5_at_n = 4;
    c_m5->add_flag("--det", m5_det, "symbolic determinant");
    c_m5->add_flag("--kernel", m5_kernel, "kernel at --at-n");
    c_m5->add_option("--at-n", m5_at_n, "specialization for --kernel (default 4)");

    // moment6
    auto* c_m6 = app.add_subcommand(
        "moment6", "66x71 level-6 matrix: generic rank 66, kernel dim 5, rank 54 at N=4, "
                   "dihedral-invariant kernel, 180 extra equations change nothing");
    bool m6_rank = false, m6_generic = false, m6_kernel = false, m6_symmetry = false,
         m6_augment = false, m6_hermitian = false;
    int m6_at_n = 0;
    std::string m6_sweep;
    c_m6->add_flag("--rank", m6_rank, "report rank");
    c_m6->add_flag("--generic", m6_generic, "rank over Q(N)");
    c_m6->add_option("--at-n", m6_at_n, "rank at an integer N");
    c_m6->add_option("--sweep", m6_sweep, "A..B: stream one JSON line of rank per N");
    c_m6->add_flag("--kernel", m6_kernel, "generic kernel basis");
    c_m6->add_flag("--symmetry", m6_symmetry, "dihedral action preserves ker M; r^3 fixes it");
    c_m6->add_flag("--augment", m6_augment, "stack the 180 auxiliary equations");
    c_m6->add_flag("--hermitian-b", m6_hermitian, "the form B: symmetric, zero diagonal, "
                                                  "not positive definite at N=6");

    // hyperplanes
    auto* c_hyp = app.add_subcommand(
        "hyperplanes", "maximal hyperplane intersection search over ker M: n0 = 39, "
                       "hence the easiness-moment bound 70-39 = 31 at level 6");
    bool h_generic = false;
    int h_at_n = 0;
    c_hyp->add_flag("--generic", h_generic, "search over Q(N)");
    c_hyp->add_option("--at-n", h_at_n, "search at an integer N (e.g. 6)");

    // weingarten
    auto* c_wg = app.add_subcommand(
        "weingarten", "exact Haar-state moment h(u_i1j1...u_ikjk) of S_N^+, e.g. "
                      "(N-3)/(N(N-1)(N-2)(N^2-3N+1)) for i=1,2,1,2,3 j=1,2,1,3,2");
    int w_k = 0;
    std::string w_i, w_j;
    c_wg->add_option("--k", w_k, "tuple length (consistency check only if no tuples)");
    c_wg->add_option("--i", w_i, "row index tuple a,b,...");
    c_wg->add_option("--j", w_j, "column index tuple a,b,...");

    // basis
    auto* c_basis = app.add_subcommand(
        "basis", "partition vectors with at most N blocks form a basis: dense ranks, "
                 "e.g. rank 41 of all 52 vectors at k=5, N=3, and the intersection "
                 "dimensions 11 (N=3) and 16 (N=4)");
    int b_k = 0, b_n = 0;
    c_basis->add_option("--k", b_k, "point count")->required();
    c_basis->add_option("--n", b_n, "parameter N")->required();

    // mobius
    auto* c_mob = app.add_subcommand(
        "mobius", "coefficients of the discrete partition vector in the others at N=k-1, "
                  "c_p = -mobius(0,p), e.g. -24 for the one-block partition at k=5");
    int mob_k = 0;
    c_mob->add_option("--k", mob_k, "point count")->required();

    // certify
    auto* c_cert = app.add_subcommand(
        "certify", "search for an operator sequence taking a vector to a nonzero multiple "
                   "of the basic crossing; certificates replay and dense-check");
    std::string cert_file;
    int cert_depth = 3, cert_oracle = 7;
    std::string cert_out;
    c_cert->add_option("--vector", cert_file, "PartitionVector JSON file")->required();
    c_cert->add_option("--depth", cert_depth, "search depth bound (<= 6)");
    c_cert->add_option("--oracle-n", cert_oracle, "dense oracle parameter");
    c_cert->add_option("--out", cert_out, "write the certificate JSON to this file");

    // replay
    auto* c_replay = app.add_subcommand(
        "replay", "re-run a certificate file against a vector and re-verify every step");
    std::string rep_cert, rep_vec;
    c_replay->add_option("--certificate", rep_cert, "certificate JSON file")->required();
    c_replay->add_option("--vector", rep_vec, "PartitionVector JSON file")->required();

    // classify
    auto* c_cls = app.add_subcommand(
        "classify", "level-3 case dispatch on the crossing-set Venn diagram of three "
                    "partitions (unique-crossing, all-equal, disjoint-union, ...)");
    std::string cls_p1, cls_p2, cls_p3;
    c_cls->add_option("--p1", cls_p1)->required();
    c_cls->add_option("--p2", cls_p2)->required();
    c_cls->add_option("--p3", cls_p3)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        if (*c_enum) {
            PartitionFilter f = PartitionFilter::All;
            if (e_filter == "noncrossing") f = PartitionFilter::Noncrossing;
            else if (e_filter == "crossing") f = PartitionFilter::Crossing;
            else if (e_filter != "all") throw argument_error("unknown filter: " + e_filter);
            auto ps = enumerate_partitions(e_k, f);
            json list = json::array();
            for (const auto& p : ps) list.push_back(p.str());
            emit(g, "enumerate", {{"k", e_k}, {"filter", e_filter}},
                 json{{"count", ps.size()}, {"partitions", list}}, start);
        } else if (*c_cross) {
            SetPartition p = SetPartition::parse(x_partition);
            json list = json::array();
            for (const auto& c : crossings(p)) list.push_back(c.pts);
            auto dec = crossing_decomposition(p);
            emit(g, "crossings", {{"partition", x_partition}},
                 json{{"partition", p.str()},
                      {"crossings", list},
                      {"crossers", dec.crossers},
                      {"crossing_part", dec.crossing_part.str()},
                      {"noncrossing_part", dec.noncrossing_part.str()}},
                 start);
        } else if (*c_m5) {
            K5Report rep = analyze_k5();
            json payload = report_json(rep.base);
            if (m5_det || !m5_kernel) {
                payload["det"] = to_json(rep.det);
                payload["det_reference"] = to_json(k5_det_reference());
                payload["det_matches_reference"] = rep.det_matches_reference;
            }
            if (m5_kernel || !m5_det) {
                payload["rank_at_4"] = rep.rank_at_4;
                json kv = json::array();
                for (const auto& c : rep.kernel_at_4) kv.push_back(rational_str(c));
                payload["kernel_at_4"] = kv;
                payload["kernel_is_eta"] = rep.kernel_is_eta;
                payload["eta_in_nc_span_at_4"] = rep.eta_in_nc_span_at_4;
            }
            emit(g, "moment5", {{"det", m5_det}, {"kernel", m5_kernel}, {"at_n", m5_at_n}},
                 std::move(payload), start);
        } else if (*c_m6) {
            K6Options opts;
            opts.threads = g.threads;
            opts.check_symmetry = m6_symmetry;
            opts.augment = m6_augment;
            if (!m6_sweep.empty()) {
                auto dots = m6_sweep.find("..");
                if (dots == std::string::npos) throw argument_error("--sweep expects A..B");
                opts.sweep = true;
                opts.sweep_lo = std::stoi(m6_sweep.substr(0, dots));
                opts.sweep_hi = std::stoi(m6_sweep.substr(dots + 2));
            }
            K6Report rep = analyze_k6(opts);
            if (opts.sweep) {
                // stream one line per N so partial progress survives interruption
                for (const auto& [n, r] : rep.base.rank_at_n)
                    std::cout << json{{"N", n}, {"rank", r}}.dump() << "\n";
            }
            json payload = report_json(rep.base);
            if (m6_rank && m6_at_n > 0)
                payload["rank"] = rank_at(rep.base.matrix, BigRational(m6_at_n));
            else if (m6_rank && (m6_generic || m6_sweep.empty()))
                payload["rank"] = rep.base.generic_rank;
            if (!m6_kernel) payload.erase("kernel_basis");
            payload["kernel_degree_at_most_3"] = rep.kernel_degree_at_most_3;
            if (m6_symmetry) {
                payload["rotation_preserves_kernel"] = rep.rotation_preserves_kernel;
                payload["reflection_preserves_kernel"] = rep.reflection_preserves_kernel;
                payload["r3_fixes_kernel"] = rep.r3_fixes_kernel;
            }
            if (m6_augment) {
                payload["augmented_rows"] = rep.augmented_rows;
                payload["augmented_rank"] = rep.augmented_rank;
            }
            if (m6_hermitian) {
                HermitianFormReport h = hermitian_form_b(rep);
                json b = json::array();
                for (const auto& row : h.b) {
                    json r = json::array();
                    for (const auto& p : row) r.push_back(to_json(p));
                    b.push_back(std::move(r));
                }
                payload["hermitian_b"] = {
                    {"entries", b},
                    {"symmetric", h.symmetric},
                    {"zero_diagonal", h.zero_diagonal},
                    {"positive_definite_at_6", h.positive_definite_at_6},
                    {"note", h.definiteness_note},
                };
            }
            emit(g, "moment6",
                 {{"rank", m6_rank}, {"generic", m6_generic}, {"at_n", m6_at_n},
                  {"sweep", m6_sweep}, {"kernel", m6_kernel}, {"symmetry", m6_symmetry},
                  {"augment", m6_augment}, {"hermitian_b", m6_hermitian}},
                 std::move(payload), start);
        } else if (*c_hyp) {
            K6Report rep = analyze_k6({});
            auto rows = kernel_rows(rep);
            json payload;
            if (h_at_n > 0 && !h_generic) {
                HyperplaneResult res = hyperplane_search_at(rows, BigRational(h_at_n), g.threads);
                json w = json::array();
                for (const auto& c : res.witness_rational) w.push_back(rational_str(c));
                payload = json{{"mode", "at-n"}, {"N", h_at_n}, {"n0", res.n0},
                               {"bound", 70 - res.n0}, {"witness_subset", res.subset},
                               {"witness", w}};
            } else {
                HyperplaneResult res = hyperplane_search_generic(rows, g.threads);
                json w = json::array();
                for (const auto& p : res.witness) w.push_back(to_json(p));
                payload = json{{"mode", "generic"}, {"n0", res.n0}, {"bound", 70 - res.n0},
                               {"witness_subset", res.subset}, {"witness", w}};
            }
            emit(g, "hyperplanes", {{"generic", h_generic}, {"at_n", h_at_n}},
                 std::move(payload), start);
        } else if (*c_wg) {
            if (!w_i.empty() || !w_j.empty()) {
                auto ti = parse_tuple(w_i), tj = parse_tuple(w_j);
                RatFuncN m = moment(ti, tj);
                emit(g, "weingarten", {{"i", w_i}, {"j", w_j}},
                     json{{"moment", m.str()}, {"moment_json", to_json(m)}}, start);
            } else {
                ConsistencyReport rep = moment_consistency(w_k);
                emit(g, "weingarten", {{"k", w_k}},
                     json{{"k", rep.k},
                          {"sum_identities_checked", rep.sum_identities_checked},
                          {"sum_identities_failed", rep.sum_identities_failed},
                          {"orthogonality_checked", rep.orthogonality_checked},
                          {"orthogonality_failed", rep.orthogonality_failed},
                          {"ok", rep.ok()}},
                     start);
            }
        } else if (*c_basis) {
            auto basis = gw_basis(b_k, b_n);
            int basis_rank = dense_rank(basis, b_n, g.budget_entries());
            auto all = enumerate_partitions(b_k, PartitionFilter::All);
            int full_rank = dense_rank(all, b_n, g.budget_entries());
            Counts cnt = counts(b_k, b_n);
            json payload{
                {"k", b_k},
                {"N", b_n},
                {"bell", cnt.bell.get_str()},
                {"catalan", cnt.catalan.get_str()},
                {"crossing_count", BigInt(cnt.bell - cnt.catalan).get_str()},
                {"dim_homP_at_N", cnt.dim_homP_at_n->get_str()},
                {"gw_basis_size", basis.size()},
                {"gw_basis_rank", basis_rank},
                {"dense_rank_all", full_rank},
            };
            if (b_k == b_n + 2) payload["intersection_dim"] = intersection_dim_nc_cr(b_k, b_n);
            emit(g, "basis", {{"k", b_k}, {"n", b_n}}, std::move(payload), start);
        } else if (*c_mob) {
            auto coeffs = mobius_expand_discrete(mob_k);
            json list = json::array();
            for (const auto& [p, c] : coeffs)
                list.push_back(json{{"partition", p.str()}, {"c", rational_str(c)}});
            emit(g, "mobius", {{"k", mob_k}},
                 json{{"k", mob_k}, {"N", mob_k - 1}, {"coefficients", list},
                      {"verified", mobius_verify(mob_k)}},
                 start);
        } else if (*c_cert) {
            std::ifstream in(cert_file);
            if (!in) throw argument_error("cannot open " + cert_file);
            PartitionVector v = partition_vector_from_json(json::parse(in));
            GenerationCertificate cert = certify(v, cert_depth, cert_oracle);
            json cj = to_json(cert);
            if (!cert_out.empty()) {
                std::ofstream out(cert_out);
                out << cj.dump(2) << "\n";
            }
            emit(g, "certify",
                 {{"vector", cert_file}, {"depth", cert_depth}, {"oracle_n", cert_oracle}},
                 std::move(cj), start);
        } else if (*c_replay) {
            std::ifstream inc(rep_cert), inv(rep_vec);
            if (!inc) throw argument_error("cannot open " + rep_cert);
            if (!inv) throw argument_error("cannot open " + rep_vec);
            GenerationCertificate cert = certificate_from_json(json::parse(inc));
            PartitionVector v = partition_vector_from_json(json::parse(inv));
            std::string err;
            bool ok = replay_certificate(cert, v, &err);
            emit(g, "replay", {{"certificate", rep_cert}, {"vector", rep_vec}},
                 json{{"ok", ok}, {"error", err}}, start);
        } else if (*c_cls) {
            SetPartition p1 = SetPartition::parse(cls_p1);
            SetPartition p2 = SetPartition::parse(cls_p2);
            SetPartition p3 = SetPartition::parse(cls_p3);
            Level3Case c = classify_level3(p1, p2, p3);
            emit(g, "classify", {{"p1", cls_p1}, {"p2", cls_p2}, {"p3", cls_p3}},
                 json{{"case", to_string(c)}}, start);
        }
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const size_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
