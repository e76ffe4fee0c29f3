// nestlab: construct, verify and search graceful and conservative labelings.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "nestlab/graph.hpp"
#include "nestlab/io.hpp"
#include "nestlab/labeling.hpp"
#include "nestlab/nested.hpp"
#include "nestlab/search.hpp"
#include "nestlab/skolem.hpp"
#include "nestlab/snowflake.hpp"

using namespace nestlab;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, capability = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::uint64_t budget_nodes = 200'000'000;
    double budget_secs = 120.0;
    int workers = 1;
    std::string out;
};

SearchBudget budget_of(const Options& o) {
    SearchBudget b;
    b.max_nodes = o.budget_nodes;
    b.max_seconds = o.budget_secs;
    return b;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
    std::ostringstream s;
    for (size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
    return s.str();
}

std::string report_text(const VerifierReport& r) {
    std::ostringstream s;
    s << "verdict " << (r.pass ? "pass" : "fail") << "\n";
    if (r.r) s << "r " << *r.r << "\n";
    for (const auto& v : r.violations) {
        s << "violation " << to_string(v.condition) << " " << v.detail;
        if (v.witness >= 0) s << " (witness " << v.witness << ")";
        s << "\n";
    }
    for (const auto& n : r.notes) s << "note " << n << "\n";
    return s.str();
}

std::string arcs_text(const OrientedLabeling& L) {
    std::ostringstream s;
    for (const auto& a : L.arcs) s << a.tail << " -> " << a.head << "  " << a.label << "\n";
    return s.str();
}

int cmd_nested(const Options& o, int m1, int m2, std::string& out) {
    NestedLabeling N;
    try {
        N = construct_nested(m1, m2);
    } catch (const std::out_of_range& e) {
        throw CapabilityError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Graph g = N.graph.graph();
    auto rep = verify_graceful(g, N.labeling, N.params.t);
    if (!rep.pass) {
        std::cerr << report_text(rep);
        return failed;
    }
    if (o.format == "machine") {
        out = write_vertex_labeling(N.labeling);
    } else if (o.format == "dot") {
        out = dot_two_nested(N.graph, &N.labeling);
    } else {
        std::ostringstream s;
        s << "m1 " << m1 << " m2 " << m2 << " m " << N.params.m << " t " << N.params.t << " case " << N.params.which
          << "\n";
        s << "chords " << join(N.graph.chord_positions) << "\n";
        s << "phi " << join(N.labeling.f) << "\n";
        s << "f " << join(N.base_labels) << "\n";
        s << "verdict " << (N.params.t == 0 ? "graceful" : "near-graceful") << "\n";
        out = s.str();
    }
    return ok;
}

int emit_labeling(const Options& o, const LabelingDocument& d, const std::string& head, std::string& out) {
    auto rep = verify_kt_conservative(d.labeling, d.k, d.t);
    if (!rep.pass) {
        std::cerr << report_text(rep);
        return failed;
    }
    LabelingDocument doc = d;
    doc.r = rep.r;
    if (o.format == "machine") out = write_labeling(doc);
    else if (o.format == "dot") out = dot_oriented(doc.labeling);
    else out = head + arcs_text(doc.labeling) + "verdict " + (doc.t == 0 ? "conservative" : "near-conservative") + "\n";
    return ok;
}

int cmd_snowflake(const Options& o, const std::string& profile_text, int forced_t, std::string& out) {
    std::vector<int> profile;
    Snowflake flake;
    try {
        profile = parse_int_list(profile_text);
        flake = make_snowflake(profile);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    const int M = flake.size();
    LabelingDocument doc;
    if (forced_t >= 0) {
        auto res = search_conservative(flake.graph(), 0, forced_t, budget_of(o));
        if (res.status == SearchStatus::exhausted) throw CapabilityError("search budget exhausted");
        if (res.status == SearchStatus::none) {
            out = "profile " + join(profile, ",") + "\nM " + std::to_string(M) + "\nt " + std::to_string(forced_t) +
                  "\nprovenance search\nresult none\n";
            return failed;
        }
        doc.labeling = *res.witness;
        doc.t = forced_t;
        doc.provenance = "search";
    } else {
        ConservativeResult res;
        try {
            res = construct_conservative(profile, budget_of(o));
        } catch (const std::runtime_error& e) {
            throw CapabilityError(e.what());
        }
        doc.labeling = res.labeling;
        doc.t = res.t;
        doc.provenance = res.provenance;
    }
    std::string head = "profile " + join(profile, ",") + "\nM " + std::to_string(M) + "\nt " + std::to_string(doc.t) +
                       "\nprovenance " + doc.provenance + "\n";
    return emit_labeling(o, doc, head, out);
}

int cmd_semidual(const Options& o, int m1, int m2, const std::string& labeling_file, bool construct,
                 std::string& out) {
    TwoNestedGraph g;
    try {
        g = build_two_nested(m1, m2, nested_t(m1 + m2));
    } catch (const std::out_of_range& e) {
        throw CapabilityError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Semidual sd = semidual(g);
    std::ostringstream s;
    s << "profile " << join(sd.flake.profile, ",") << "\n";
    if (o.format != "machine")
        for (int e = 0; e < sd.flake.size(); ++e) {
            int p = sd.primal_edge[e];
            s << "edge " << e << " <-> " << (g.is_chord_edge(p) ? "chord " : "base ") << p << "\n";
        }
    std::optional<VertexLabeling> f;
    if (!labeling_file.empty()) {
        try {
            f = parse_vertex_labeling(read_file(labeling_file));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    } else if (construct) {
        f = construct_nested(m1, m2).labeling;
    }
    if (!f) {
        out = s.str();
        return ok;
    }
    OrientedLabeling L;
    try {
        L = induce_semidual_labeling(g, *f);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return failed;
    }
    LabelingDocument doc{L, 0, f->t, std::nullopt, "semidual"};
    std::string body;
    int code = emit_labeling(o, doc, "", body);
    out = (o.format == "text" ? s.str() : "") + body;
    return code;
}

int cmd_verify(const Options& o, const std::string& file, const std::string& kind, std::optional<Label> k,
               std::optional<int> t, const std::string& graph_spec, std::string& out) {
    (void)o;
    VerifierReport rep;
    try {
        std::string text = read_file(file);
        if (kind == "conservative" || kind == "eulerian") {
            auto d = parse_labeling(text);
            if (kind == "eulerian") rep = verify_eulerian(d.labeling);
            else rep = verify_kt_conservative(d.labeling, k.value_or(d.k), t.value_or(d.t));
        } else if (kind == "graceful") {
            if (graph_spec.empty()) throw UsageError("graceful verification needs --graph INSTANCE");
            auto f = parse_vertex_labeling(text);
            rep = verify_graceful(parse_instance(graph_spec).graph, f, t.value_or(f.t));
        } else if (kind == "pairing") {
            rep = verify_pairing(parse_pairing(text));
        } else if (kind == "system") {
            rep = verify_system(parse_system(text).system);
        } else if (kind == "zero-sum") {
            rep = verify_zero_sum(parse_system(text));
        } else {
            throw UsageError("unknown kind '" + kind + "'");
        }
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const UsageError*>(&e)) throw;
        throw UsageError(e.what());
    }
    out = report_text(rep);
    return rep.pass ? ok : failed;
}

int cmd_skolem(const Options& o, int n, int t, std::optional<Label> system_k, bool zero_sum, std::string& out) {
    if (n < 1 || (t != 0 && t != 1)) throw UsageError("need n >= 1 and t in {0,1}");
    if (n > 60) throw CapabilityError("pairings are constructed for n <= 60 only");
    if (zero_sum) {
        ZeroSumSystem Z;
        try {
            Z = zero_sum_system(n, system_k.value_or(0), t, budget_of(o));
        } catch (const std::domain_error& e) {
            out = std::string("none ") + e.what() + "\n";
            return failed;
        } catch (const std::runtime_error& e) {
            throw CapabilityError(e.what());
        }
        out = write_system(Z.system, Z.distinguished);
        return verify_zero_sum(Z).pass ? ok : failed;
    }
    std::optional<SkolemPairing> p;
    try {
        p = skolem_pairing(n, t, budget_of(o));
    } catch (const std::runtime_error& e) {
        throw CapabilityError(e.what());
    }
    if (!p) {
        out = "none\n";
        return failed;
    }
    if (!verify_pairing(*p).pass) return failed;
    if (system_k) {
        SkolemSystem S = system_from_pairing(*p, *system_k);
        out = write_system(S);
        return verify_system(S).pass ? ok : failed;
    }
    if (o.format == "machine") {
        out = write_pairing(*p);
    } else {
        std::ostringstream s;
        for (size_t i = 0; i < p->pairs.size(); ++i)
            s << (i ? " " : "") << "(" << p->pairs[i].first << "," << p->pairs[i].second << ")";
        out = s.str() + "\n";
    }
    return ok;
}

struct SearchOutcome {
    SearchStatus status;
    std::string witness;  // serialized
    std::uint64_t nodes;
    double seconds;
};

SearchOutcome run_search(const std::string& kind, const Instance& I, Label k, int t, const SearchBudget& b) {
    if (kind == "graceful") {
        auto r = search_graceful(I.graph, t, b);
        return {r.status, r.witness ? write_vertex_labeling(*r.witness) : "", r.nodes, r.seconds};
    }
    if (kind == "conservative") {
        auto r = search_conservative(I.graph, k, t, b);
        std::string w;
        if (r.witness) {
            auto rep = verify_kt_conservative(*r.witness, k, t);
            w = write_labeling({*r.witness, k, t, rep.r, "search"});
        }
        return {r.status, w, r.nodes, r.seconds};
    }
    throw UsageError("unknown search kind '" + kind + "'");
}

int cmd_search(const Options& o, const std::string& kind, const std::string& spec, Label k, int t, std::string& out) {
    Instance I;
    try {
        I = parse_instance(spec);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    auto r = run_search(kind, I, k, t, budget_of(o));
    std::ostringstream s;
    s << "status " << to_string(r.status) << "\nnodes " << r.nodes << "\n";
    if (o.format != "machine") s << "seconds " << r.seconds << "\n";
    s << r.witness;
    out = s.str();
    if (r.status == SearchStatus::found) return ok;
    return r.status == SearchStatus::none ? failed : capability;
}

int cmd_campaign(const Options& o, const std::string& list, const std::string& witness_dir, std::string& out) {
    struct Job {
        std::string id, kind, spec;
        int t = 0;
        Label k = 0;
    };
    std::vector<Job> jobs;
    std::istringstream in(read_file(list));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Job j;
        if (!(ls >> j.id >> j.kind >> j.spec >> j.t)) throw UsageError("line " + std::to_string(lineno) + ": expected id kind instance t [k]");
        ls >> j.k;
        jobs.push_back(j);
    }
    std::vector<CampaignRecord> records(jobs.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> bad_usage{false};
    std::mutex err_mu;
    auto worker = [&]() {
        for (size_t i = next++; i < jobs.size(); i = next++) {
            const Job& j = jobs[i];
            CampaignRecord& rec = records[i];
            rec.id = j.id;
            rec.witness_path = "-";
            auto start = std::chrono::steady_clock::now();
            try {
                auto r = run_search(j.kind, parse_instance(j.spec), j.k, j.t, budget_of(o));
                rec.status = r.status;
                rec.nodes = r.nodes;
                if (!r.witness.empty() && !witness_dir.empty()) {
                    rec.witness_path = witness_dir + "/" + j.id + ".txt";
                    write_file(rec.witness_path, r.witness);
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mu);
                std::cerr << j.id << ": " << e.what() << "\n";
                bad_usage = true;
                rec.status = SearchStatus::exhausted;
            }
            rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                              .count();
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(1, o.workers); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::ostringstream s;
    for (const auto& r : records) s << write_campaign_record(r) << "\n";
    out = s.str();
    return bad_usage ? usage : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graceful labelings of two-nested-cycles graphs and conservative labelings of snowflakes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine", "dot"}))->capture_default_str();
    app.add_option("--budget-nodes", o.budget_nodes, "Search node limit")->capture_default_str();
    app.add_option("--budget-secs", o.budget_secs, "Search time limit in seconds")->capture_default_str();
    app.add_option("--workers", o.workers, "Concurrent campaign instances")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--out", o.out, "Write the primary output to this file instead of stdout");

    int m1 = 0, m2 = 0;
    auto* nested = app.add_subcommand("nested", "Graceful or near-graceful labeling of N(m1, m2)");
    nested->add_option("m1", m1)->required();
    nested->add_option("m2", m2)->required();

    std::string profile;
    int forced_t = -1;
    auto* snow = app.add_subcommand("snowflake", "Conservative or near-conservative labeling of a snowflake");
    snow->add_option("profile", profile, "Star sizes, comma separated")->required();
    snow->add_option("--t", forced_t, "Search for this t instead of constructing")->check(CLI::Range(0, 1));

    std::string sd_file;
    bool sd_construct = false;
    int s1 = 0, s2 = 0;
    auto* sd = app.add_subcommand("semidual", "Semidual snowflake of N(m1, m2) and the induced labeling");
    sd->add_option("m1", s1)->required();
    sd->add_option("m2", s2)->required();
    sd->add_option("--labeling", sd_file, "Vertex labeling file of the two-nested graph");
    sd->add_flag("--construct", sd_construct, "Use the constructed graceful labeling");

    std::string vfile, vkind, vgraph;
    std::optional<Label> vk;
    std::optional<int> vt;
    auto* ver = app.add_subcommand("verify", "Check a labeling, pairing or system file");
    ver->add_option("file", vfile)->required();
    ver->add_option("kind", vkind, "conservative, eulerian, graceful, pairing, system or zero-sum")->required();
    ver->add_option("k", vk);
    ver->add_option("t", vt);
    ver->add_option("--graph", vgraph, "Instance for graceful verification");

    int sn = 0, st = 0;
    std::optional<Label> sk;
    bool szero = false;
    auto* sko = app.add_subcommand("skolem", "t-Skolem pairing of order n");
    sko->add_option("n", sn)->required();
    sko->add_option("t", st)->required();
    sko->add_option("--system", sk, "Print the (3n; k; t)-system built from the pairing");
    sko->add_flag("--zero-sum", szero, "Print a zero-sum system (k from --system, default 0)");

    std::string skind, sspec;
    int sst = 0;
    Label ssk = 0;
    auto* sea = app.add_subcommand("search", "Backtracking search for a labeling");
    sea->add_option("kind", skind, "graceful or conservative")->required();
    sea->add_option("instance", sspec, "cycle:N, star:N, snowflake:a,b,..., nested:m1,m2, chords:m2:p1,p2,..., file:PATH")
        ->required();
    sea->add_option("--t", sst)->check(CLI::Range(0, 1));
    sea->add_option("--k", ssk)->check(CLI::NonNegativeNumber);

    std::string clist, cdir;
    auto* camp = app.add_subcommand("campaign", "Run searches listed as 'id kind instance t [k]' per line");
    camp->add_option("list", clist)->required()->check(CLI::ExistingFile);
    camp->add_option("--witness-dir", cdir, "Directory for witness files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    std::string out;
    int code = ok;
    try {
        if (*nested) code = cmd_nested(o, m1, m2, out);
        else if (*snow) code = cmd_snowflake(o, profile, forced_t, out);
        else if (*sd) code = cmd_semidual(o, s1, s2, sd_file, sd_construct, out);
        else if (*ver) code = cmd_verify(o, vfile, vkind, vk, vt, vgraph, out);
        else if (*sko) code = cmd_skolem(o, sn, st, sk, szero, out);
        else if (*sea) code = cmd_search(o, skind, sspec, ssk, sst, out);
        else if (*camp) code = cmd_campaign(o, clist, cdir, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return capability;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return capability;
    }
    if (o.out.empty()) {
        std::cout << out;
    } else {
        try {
            write_file(o.out, out);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return capability;
        }
    }
    return code;
}
