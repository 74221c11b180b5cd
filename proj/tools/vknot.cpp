// vknot: batch workbench for virtual knots as Gauss diagrams.
//
// Subcommands run over corpus files (one code per line, '#' comments) or
// inline codes, emit one structured record per input in input order, and
// never let one malformed line abort the batch. Records mode prints JSON
// lines with a stable field order; --format human prints prose.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <vknot/finite_type.hpp>
#include <vknot/gauss.hpp>
#include <vknot/invariants.hpp>
#include <vknot/moves.hpp>
#include <vknot/pipeline.hpp>
#include <vknot/ssf.hpp>

using json = nlohmann::ordered_json;
using namespace vknot;

namespace {

struct Options {
    int depth = 6;
    int max_n = -1; // -1: per-item default input+2
    std::string format = "records";
    std::string out_path;
    bool timings = false;
};

struct InputLine {
    std::string text;
    std::string origin; // "file:lineno" or "inline:k"
    int number = 0;
};

std::vector<InputLine> gather_inputs(const std::vector<std::string>& files,
                                     const std::vector<std::string>& codes) {
    std::vector<InputLine> lines;
    int counter = 0;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input file: " + path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = 0;
            while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
            if (i >= line.size() || line[i] == '#') continue;
            lines.push_back({line, path + ":" + std::to_string(lineno), ++counter});
        }
    }
    for (const auto& c : codes) lines.push_back({c, "inline", ++counter});
    return lines;
}

int thread_count() {
    if (const char* env = std::getenv("VKNOT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

// Runs fn over all inputs, possibly in parallel; output is re-serialized in
// input order and byte-deterministic.
template <typename Fn>
std::pair<std::vector<std::string>, bool> run_batch(const std::vector<InputLine>& inputs,
                                                    Fn&& fn) {
    std::vector<std::string> out(inputs.size());
    std::vector<char> failed(inputs.size(), 0);
    const int threads = std::min<int>(thread_count(), std::max<int>(1, int(inputs.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= inputs.size()) return;
            try {
                out[i] = fn(inputs[i]);
            } catch (const std::exception& e) {
                json rec;
                rec["input"] = inputs[i].number;
                rec["origin"] = inputs[i].origin;
                rec["error"] = e.what();
                out[i] = rec.dump();
                failed[i] = 1;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    bool any_failed = false;
    for (char f : failed) any_failed |= (f != 0);
    return {out, any_failed};
}

std::string poly_str(const LaurentPoly2& p) { return p.to_string(); }

json fingerprint_json(const Fingerprint& f) {
    json j;
    j["reduced_sawollek"] = poly_str(f.reduced_sawollek);
    j["writhe"] = f.writhe;
    j["n"] = f.n;
    j["nonclassical"] = f.nonclassical_certificate;
    return j;
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

void emit(const Options& opt, const std::vector<std::string>& records) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) throw std::runtime_error("cannot open output file: " + opt.out_path);
        os = &file;
    }
    for (const auto& r : records) *os << r << "\n";
}

// human rendering of a record produced as JSON
std::string humanize(const std::string& record_json) {
    json j = json::parse(record_json);
    std::ostringstream os;
    if (j.contains("error")) {
        os << "input " << j.value("input", 0) << " (" << j.value("origin", std::string{})
           << "): ERROR " << j["error"].get<std::string>();
        return os.str();
    }
    if (j.contains("verdict")) {
        os << "input " << j.value("input", 0) << ": " << j["verdict"].get<std::string>()
           << " -- " << j.value("narrative", std::string{});
        return os.str();
    }
    return j.dump();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual knot workbench over Gauss diagram corpora"};
    app.require_subcommand(1);

    Options opt;
    int max_r = 8;
    std::vector<std::string> files, codes;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("files", files, "corpus files, one code per line");
        sub->add_option("--code", codes, "inline code (repeatable)");
        sub->add_option("--depth", opt.depth, "search depth bound")->capture_default_str();
        sub->add_option("--max-n", opt.max_n, "crossing bound for search (default input+2)");
        sub->add_option("--max-r", max_r, "singular chord bound for resolve")
            ->capture_default_str();
        sub->add_option("--format", opt.format, "records|human")
            ->check(CLI::IsMember({"records", "human"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out_path, "write report to file instead of stdout");
        sub->add_flag("--timings", opt.timings, "include per-item wall time in records");
    };

    auto* validate = app.add_subcommand("validate", "parse codes and print canonical forms");
    auto* invariant = app.add_subcommand("invariant", "reduced Sawollek fingerprints");
    auto* noninvert =
        app.add_subcommand("noninvert", "non-invertibility certificates via the arrow flip");
    auto* nonsplit = app.add_subcommand("nonsplit", "non-splitness certificates");
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "virtual knot spectra; each file is one spectrum");
    auto* ssf_convert =
        app.add_subcommand("ssf-convert", "convert SSF records to Gauss diagrams");
    auto* resolve = app.add_subcommand("resolve", "expand singular codes through e_r");
    auto* search = app.add_subcommand("search", "bounded equivalence search on two codes");
    for (auto* sub : {validate, invariant, noninvert, nonsplit, spectrum_cmd, ssf_convert,
                      resolve, search})
        add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<std::string> records;
        bool any_failed = false;

        auto per_diagram = [&](auto&& body) {
            auto inputs = gather_inputs(files, codes);
            auto [recs, failed] = run_batch(inputs, [&](const InputLine& in) {
                const auto t0 = std::chrono::steady_clock::now();
                GaussDiagram d = parse_gauss_code(in.text);
                json rec;
                rec["input"] = in.number;
                rec["origin"] = in.origin;
                rec["code"] = d.canonical_code().text;
                body(d, rec);
                if (opt.timings) rec["ms"] = elapsed_ms(t0);
                return rec.dump();
            });
            records = recs;
            any_failed = failed;
        };

        if (*validate) {
            per_diagram([](const GaussDiagram& d, json& rec) {
                rec["n"] = d.n();
                rec["writhe"] = d.writhe();
                rec["ok"] = true;
            });
        } else if (*invariant) {
            per_diagram([](const GaussDiagram& d, json& rec) {
                rec["fingerprint"] = fingerprint_json(fingerprint(d));
            });
        } else if (*noninvert) {
            per_diagram([](const GaussDiagram& d, json& rec) {
                Certificate c = noninvertibility_certificate(d);
                rec["verdict"] = to_string(c.verdict);
                rec["fingerprint"] = fingerprint_json(c.evidence_primary);
                rec["transform_fingerprint"] = fingerprint_json(c.evidence_secondary);
                rec["narrative"] = c.narrative;
            });
        } else if (*nonsplit) {
            per_diagram([](const GaussDiagram& d, json& rec) {
                Certificate c = nonsplit_certificate(d);
                rec["verdict"] = to_string(c.verdict);
                rec["fingerprint"] = fingerprint_json(c.evidence_primary);
                rec["narrative"] = c.narrative;
            });
        } else if (*spectrum_cmd) {
            // one spectrum per input file; lifts are the file's diagrams
            if (files.empty()) throw std::runtime_error("spectrum needs at least one file");
            std::vector<Spectrum> spectra;
            for (const auto& path : files) {
                auto inputs = gather_inputs({path}, {});
                std::vector<GaussDiagram> lifts;
                for (const auto& in : inputs) lifts.push_back(parse_gauss_code(in.text));
                Spectrum s = spectrum(lifts);
                spectra.push_back(s);
                json rec;
                rec["file"] = path;
                rec["index"] = s.index;
                json arr = json::array();
                for (const auto& f : s.lifts) arr.push_back(fingerprint_json(f));
                rec["lifts"] = arr;
                rec["note"] = "each lift is assumed presented in special Seifert form "
                              "relative to some fiber of its own; distinct lifts may use "
                              "distinct fibers";
                records.push_back(rec.dump());
            }
            if (spectra.size() == 2) {
                json rec;
                rec["comparison"] = "spectra";
                rec["equal"] = spectra_equal(spectra[0], spectra[1]);
                records.push_back(rec.dump());
            }
        } else if (*ssf_convert) {
            // each file is one SSF record; inline codes are not supported here
            if (files.empty()) throw std::runtime_error("ssf-convert needs SSF files");
            int number = 0;
            for (const auto& path : files) {
                ++number;
                std::ifstream in(path);
                if (!in) throw std::runtime_error("cannot open input file: " + path);
                std::stringstream buf;
                buf << in.rdbuf();
                json rec;
                rec["input"] = number;
                rec["origin"] = path;
                try {
                    SSFDiagram s = parse_ssf(buf.str());
                    GaussDiagram d = to_gauss(s);
                    rec["surface_genus"] = s.surface().genus;
                    rec["surface_boundary"] = s.surface().boundary;
                    rec["gauss"] = d.canonical_code().text;
                } catch (const std::exception& e) {
                    rec["error"] = e.what();
                    any_failed = true;
                }
                records.push_back(rec.dump());
            }
        } else if (*resolve) {
            auto inputs = gather_inputs(files, codes);
            auto [recs, failed] = run_batch(inputs, [&](const InputLine& in) {
                SingularGaussDiagram d = parse_singular_code(in.text);
                if (d.singular_count() > max_r)
                    throw std::runtime_error("diagram has " +
                                             std::to_string(d.singular_count()) +
                                             " singular chords, above --max-r " +
                                             std::to_string(max_r));
                json rec;
                rec["input"] = in.number;
                rec["origin"] = in.origin;
                rec["r"] = d.singular_count();
                FormalSum s = e_r(d);
                json terms = json::array();
                for (const auto& [code, coeff] : s.terms()) {
                    json t;
                    t["coeff"] = coeff;
                    t["code"] = code;
                    terms.push_back(t);
                }
                rec["support"] = s.support_size();
                rec["terms"] = terms;
                return rec.dump();
            });
            records = recs;
            any_failed = failed;
        } else if (*search) {
            auto inputs = gather_inputs(files, codes);
            if (inputs.size() != 2)
                throw std::runtime_error("search needs exactly two codes (got " +
                                         std::to_string(inputs.size()) + ")");
            GaussDiagram d1 = parse_gauss_code(inputs[0].text);
            GaussDiagram d2 = parse_gauss_code(inputs[1].text);
            const int max_n = opt.max_n > 0 ? opt.max_n : std::max(d1.n(), d2.n()) + 2;
            SearchVerdict v = bounded_equivalent(d1, d2, opt.depth, max_n);
            json rec;
            rec["source"] = d1.canonical_code().text;
            rec["target"] = d2.canonical_code().text;
            rec["status"] = v.status == SearchStatus::Equivalent ? "Equivalent" : "Unknown";
            json wit = json::array();
            for (const auto& m : v.witness) wit.push_back(m.to_string());
            rec["witness"] = wit;
            rec["nodes_expanded"] = v.stats.nodes_expanded;
            rec["frontier_peak"] = v.stats.frontier_peak;
            records.push_back(rec.dump());
        }

        if (opt.format == "human") {
            for (auto& r : records) r = humanize(r);
        }
        emit(opt, records);
        return any_failed ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
