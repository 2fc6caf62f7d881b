#include <pawn/arith.hpp>
#include <pawn/classify.hpp>
#include <pawn/enumerate.hpp>
#include <pawn/errors.hpp>
#include <pawn/index_sequence.hpp>
#include <pawn/records.hpp>
#include <pawn/weird.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerify = 2, kCeiling = 3 };

struct Globals {
    std::optional<std::uint64_t> det_limit;
    std::optional<unsigned> mr_rounds;
    bool certify = false;

    pawn::PrimalityPolicy policy() const {
        auto p = pawn::PrimalityPolicy::from_environment();
        if (det_limit) p.deterministic_limit = *det_limit;
        if (mr_rounds) p.probabilistic_rounds = *mr_rounds;
        p.certify = p.certify || certify;
        p.validate();
        return p;
    }
};

// Record destination: nothing, a file, or stdout for "-".
class Output {
public:
    explicit Output(const std::string& path) : path_(path) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw pawn::InvalidArgument("cannot open " + path + " for writing");
    }

    bool active() const { return !path_.empty(); }
    bool to_stdout() const { return path_ == "-"; }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    // Human-readable output goes to stderr when stdout carries records.
    std::ostream& info() { return to_stdout() ? std::cerr : std::cout; }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
};

std::string manifest_path(const std::string& explicit_path, const std::string& out) {
    if (!explicit_path.empty()) return explicit_path;
    if (!out.empty() && out != "-") return out + ".manifest.json";
    return {};
}

void write_manifest(const std::string& path, const pawn::RunManifest& m) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw pawn::InvalidArgument("cannot open " + path + " for writing");
    f << m.to_json() << '\n';
}

struct EnumerateArgs {
    std::string mode = "pndn";
    unsigned k = 3;
    std::string seed = "1";
    bool odd = false;
    bool include_perfect = false;
    bool count_only = false;
    unsigned jobs = 1;
    std::string out;
    std::string manifest;
};

int run_enumerate(const EnumerateArgs& a, const Globals& g) {
    const auto policy = g.policy();
    const auto seed = pawn::Factorization::parse(a.seed, policy);
    const bool square_free = a.mode == "sfpan";

    pawn::EnumOptions opt;
    opt.odd_only = a.odd;
    opt.include_perfect = a.include_perfect;
    opt.jobs = a.jobs;
    opt.policy = policy;

    pawn::RunManifest m;
    m.command = "enumerate";
    m.config = {{"mode", a.mode},
                {"k", std::to_string(a.k)},
                {"seed", seed.to_string()},
                {"odd", a.odd ? "true" : "false"},
                {"include_perfect", a.include_perfect ? "true" : "false"},
                {"count_only", a.count_only ? "true" : "false"},
                {"jobs", std::to_string(a.jobs)},
                {"det_limit", std::to_string(policy.deterministic_limit)},
                {"mr_rounds", std::to_string(policy.probabilistic_rounds)}};
    m.started = pawn::utc_timestamp();

    Output out(a.count_only ? std::string() : a.out);
    pawn::EnumOutcome o;
    if (a.count_only) {
        o = square_free ? pawn::sfpan_count(a.k, seed, opt) : pawn::pndn_count(a.k, seed, opt);
    } else {
        pawn::RecordWriter writer(out.stream());
        std::mutex mu;
        pawn::RecordSink sink;
        if (out.active())
            sink = [&](const pawn::EnumRecord& r) {
                std::lock_guard lock(mu);
                writer.write(r);
            };
        o = square_free ? pawn::sfpan(a.k, seed, sink, opt) : pawn::pndn(a.k, seed, sink, opt);
        out.stream().flush();
    }
    m.finished = pawn::utc_timestamp();
    m.totals = {{"abundant", o.count_abundant}, {"perfect", o.count_perfect}};
    m.output_path = out.to_stdout() ? "-" : a.count_only ? "" : a.out;
    write_manifest(manifest_path(a.manifest, a.count_only ? "" : a.out), m);

    out.info() << "abundant: " << o.count_abundant << "\nperfect: " << o.count_perfect << '\n';
    return kOk;
}

struct SearchArgs {
    std::string seed = "2";
    unsigned amplitude = 3;
    unsigned k = 3;
    bool squares = false;
    bool strict = false;
    unsigned jobs = 1;
    std::string out;
    std::string manifest;
};

int run_search(const SearchArgs& a, const Globals& g) {
    pawn::SearchConfig cfg;
    cfg.policy = g.policy();
    cfg.seed = pawn::Factorization::parse(a.seed, cfg.policy);
    cfg.k = a.k;
    cfg.amplitude = a.amplitude;
    cfg.allow_square_extensions = a.squares;
    cfg.strict_sigma_bound = a.strict;
    cfg.jobs = a.jobs;

    pawn::RunManifest m;
    m.command = "weird search";
    m.config = {{"seed", cfg.seed.to_string()},
                {"k", std::to_string(a.k)},
                {"amplitude", std::to_string(a.amplitude)},
                {"squares", a.squares ? "true" : "false"},
                {"strict_sigma_bound", a.strict ? "true" : "false"},
                {"jobs", std::to_string(a.jobs)},
                {"det_limit", std::to_string(cfg.policy.deterministic_limit)},
                {"mr_rounds", std::to_string(cfg.policy.probabilistic_rounds)}};
    m.started = pawn::utc_timestamp();

    Output out(a.out);
    pawn::RecordWriter writer(out.stream());
    auto sink = [&](const pawn::PwnRecord& r) {
        if (out.active())
            writer.write(r);
        else
            std::cout << r.factorization << "  " << r.index_sequence.to_string() << "  Δ=" << r.abundance
                      << "  digits=" << r.digits << '\n';
    };
    const auto n = a.squares ? pawn::pwn_search_general(cfg, sink) : pawn::pwn_search_squarefree(cfg, sink);
    out.stream().flush();
    m.finished = pawn::utc_timestamp();
    m.totals = {{"weird", n}};
    m.output_path = a.out;
    write_manifest(manifest_path(a.manifest, a.out), m);
    out.info() << "weird: " << n << '\n';
    return kOk;
}

int run_check(const std::string& text, const Globals& g) {
    const auto f = pawn::Factorization::parse(text, g.policy());
    const auto cls = pawn::classify(f);
    const mpz_class delta = pawn::abundance(f);
    std::cout << pawn::to_string(cls) << ", ";
    if (cls == pawn::NumberClass::Abundant)
        std::cout << (pawn::is_weird(f) ? "weird" : "not weird");
    else
        std::cout << "not weird";
    std::cout << ", Δ=" << delta;
    if (cls != pawn::NumberClass::Deficient)
        std::cout << ", " << (pawn::is_primitive_nondeficient_oracle(f) ? "primitive" : "not primitive");
    std::cout << '\n';
    return kOk;
}

int run_certify(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pawn::InvalidArgument("cannot open " + path);
    std::uint64_t records = 0, proven = 0, probable = 0, composite = 0;
    for (const auto& r : pawn::read_records(in)) {
        ++records;
        const auto f = pawn::Factorization::parse(r.factorization, pawn::PrimalityPolicy{});
        for (const auto& pp : f.factors()) {
            switch (pawn::certify_prime(pp.prime)) {
            case pawn::PrimeVerdict::Prime:
                ++proven;
                break;
            case pawn::PrimeVerdict::ProbablePrime:
                ++probable;
                std::cout << "external " << pp.prime << '\n';
                break;
            case pawn::PrimeVerdict::Composite:
                ++composite;
                std::cout << "composite " << pp.prime << " in " << r.factorization << '\n';
                break;
            }
        }
    }
    std::cerr << records << " records, " << proven << " primes proven, " << probable
              << " need an external certificate, " << composite << " composite\n";
    return composite ? kVerify : kOk;
}

int run_export(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw pawn::InvalidArgument("cannot open " + in_path);
    Output out(out_path.empty() ? "-" : out_path);
    const auto n = pawn::records_to_csv(in, out.stream());
    std::cerr << n << " records exported\n";
    return kOk;
}

// Re-derives every stored field and compares the per-class tallies with
// the manifest totals.
int run_verify(const std::string& in_path, const std::string& manifest, const Globals& g) {
    std::ifstream in(in_path);
    if (!in) throw pawn::InvalidArgument("cannot open " + in_path);
    const auto policy = g.policy();
    std::uint64_t abundant = 0, perfect = 0, weird = 0, bad = 0;
    for (const auto& r : pawn::read_records(in)) {
        const auto f = pawn::Factorization::parse(r.factorization, policy);
        const auto cls = pawn::classify(f);
        bool ok = std::string(pawn::to_string(cls)) == r.cls && pawn::abundance(f).get_str() == r.delta &&
                  f.omega() == r.omega && f.big_omega() == r.big_omega && f.digits() == r.digits &&
                  cls != pawn::NumberClass::Deficient && pawn::is_primitive_nondeficient_oracle(f);
        if (ok && r.index_sequence) {
            ok = pawn::decode_index_sequence(pawn::IndexSequence::parse(*r.index_sequence), policy) == f &&
                 cls == pawn::NumberClass::Abundant && pawn::is_weird(f);
            if (ok) ++weird;
        }
        if (!ok) {
            ++bad;
            std::cout << "invalid " << r.factorization << '\n';
            continue;
        }
        (cls == pawn::NumberClass::Abundant ? abundant : perfect) += 1;
    }
    int status = bad ? kVerify : kOk;
    if (!manifest.empty()) {
        std::ifstream mf(manifest);
        if (!mf) throw pawn::InvalidArgument("cannot open " + manifest);
        const std::string text((std::istreambuf_iterator<char>(mf)), std::istreambuf_iterator<char>());
        const auto m = pawn::RunManifest::parse(text);
        auto expect = [&](const char* key, std::uint64_t got) {
            const auto want = m.total(key);
            if (!want) return;
            if (*want != got) {
                std::cout << key << ": manifest " << *want << ", records " << got << '\n';
                status = kVerify;
            }
        };
        if (m.command == "weird search") {
            expect("weird", weird);
        } else {
            expect("abundant", abundant);
            expect("perfect", perfect);
        }
    }
    std::cout << "abundant: " << abundant << "\nperfect: " << perfect << "\nweird: " << weird
              << "\ninvalid: " << bad << '\n';
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Primitive abundant and primitive weird number enumeration"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--det-limit", g.det_limit, "Deterministic primality limit (default 2^64, env PAWN_DET_LIMIT)");
    app.add_option("--mr-rounds", g.mr_rounds, "Probabilistic rounds above the limit (env PAWN_MR_ROUNDS)");
    app.add_flag("--certify", g.certify, "Prove every prime below 2^64 deterministically");

    EnumerateArgs ea;
    auto* en = app.add_subcommand("enumerate", "Primitive abundant numbers with k prime factors");
    en->add_option("--mode", ea.mode, "sfpan (square-free, k = omega) or pndn (k = Omega)")
        ->check(CLI::IsMember({"sfpan", "pndn"}));
    en->add_option("--k", ea.k, "Number of primes appended to the seed")->required();
    en->add_option("--seed", ea.seed, "Deficient starting factorization");
    en->add_flag("--odd", ea.odd, "Odd results only");
    en->add_flag("--include-perfect", ea.include_perfect, "Emit primitive perfect numbers too");
    en->add_flag("--count-only", ea.count_only, "Count leaves with the prime sieve instead of emitting them");
    en->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::PositiveNumber);
    en->add_option("--out", ea.out, "JSON-lines record file, - for stdout");
    en->add_option("--manifest", ea.manifest, "Manifest path (default <out>.manifest.json)");

    auto* wd = app.add_subcommand("weird", "Weird numbers and index sequences");
    wd->require_subcommand(1);
    SearchArgs sa;
    auto* se = wd->add_subcommand("search", "Amplitude-bounded primitive weird number search");
    se->add_option("--seed", sa.seed, "Deficient seed");
    se->add_option("--amplitude", sa.amplitude, "Candidate primes per level")->check(CLI::PositiveNumber);
    se->add_option("--k", sa.k, "Target omega (Omega with --squares), counting the seed");
    se->add_flag("--squares", sa.squares, "Allow the largest prime to repeat");
    se->add_flag("--strict-sigma-bound", sa.strict, "Last prime must exceed every sigma(q^a)");
    se->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
    se->add_option("--out", sa.out, "JSON-lines record file, - for stdout");
    se->add_option("--manifest", sa.manifest, "Manifest path (default <out>.manifest.json)");

    std::string check_arg, decode_arg, encode_arg, certify_in;
    auto* ch = wd->add_subcommand("check", "Classify a factorization and decide weirdness");
    ch->add_option("factorization", check_arg)->required();
    auto* de = wd->add_subcommand("decode", "Index sequence to factorization");
    de->add_option("sequence", decode_arg)->required();
    auto* ec = wd->add_subcommand("encode", "Factorization to index sequence");
    ec->add_option("factorization", encode_arg)->required();
    auto* ce = wd->add_subcommand("certify", "Re-check the primality of every stored factor");
    ce->add_option("--in", certify_in)->required();

    std::string export_in, export_out;
    auto* ex = app.add_subcommand("export", "Convert a JSON-lines record file to CSV");
    ex->add_option("--in", export_in)->required();
    ex->add_option("--out", export_out, "CSV path (default stdout)");

    std::string verify_in, verify_manifest;
    auto* ve = app.add_subcommand("verify", "Re-verify a record file against its manifest");
    ve->add_option("--in", verify_in)->required();
    ve->add_option("--manifest", verify_manifest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*en) return run_enumerate(ea, g);
        if (*se) return run_search(sa, g);
        if (*ch) return run_check(check_arg, g);
        if (*de) {
            std::cout << pawn::decode_index_sequence(pawn::IndexSequence::parse(decode_arg), g.policy()) << '\n';
            return kOk;
        }
        if (*ec) {
            std::cout << pawn::encode_index_sequence(pawn::Factorization::parse(encode_arg, g.policy()), g.policy())
                             .to_string()
                      << '\n';
            return kOk;
        }
        if (*ce) return run_certify(certify_in);
        if (*ex) return run_export(export_in, export_out);
        if (*ve) return run_verify(verify_in, verify_manifest, g);
    } catch (const pawn::CeilingExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCeiling;
    } catch (const pawn::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
