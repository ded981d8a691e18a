#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cleanmat/clean2.hpp"
#include "cleanmat/factor.hpp"
#include "cleanmat/oracle.hpp"
#include "cleanmat/pi_regular.hpp"
#include "cleanmat/zmat.hpp"

namespace cleanmat::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kNegative = 2;
inline constexpr int kUnknown = 3;
inline constexpr int kUsage = 64;

using json = nlohmann::ordered_json;

namespace detail {

inline json matrix_json(const Mat2 &m)
{
    return json::array({json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                        json::array({m(1, 0).to_string(), m(1, 1).to_string()})});
}

inline Mat2 matrix_from_json(const LocalRing &r, const json &j)
{
    std::vector<Element> e;
    for (const auto &row : j)
        for (const auto &cell : row)
            e.push_back(parse_element(r, cell.get<std::string>()));
    if (e.size() != 4)
        throw ParseError(0, "matrix needs four entries");
    return {e[0], e[1], e[2], e[3]};
}

inline json poly_json(const Poly &p)
{
    json coeffs = json::array();
    for (const auto &c : p)
        coeffs.push_back(c.to_string());
    return {{"text", poly::to_string(p)}, {"coefficients", coeffs}};
}

inline Poly poly_from_json(const LocalRing &r, const json &j)
{
    Poly p;
    for (const auto &c : j.at("coefficients"))
        p.push_back(parse_element(r, c.get<std::string>()));
    return p;
}

template <class T> json optional_string(const std::optional<T> &v)
{
    if (!v)
        return nullptr;
    return v->to_string();
}

/// Renders a flat JSON object as `key: value` lines.
inline void print_text(std::ostream &out, const json &doc, const std::string &prefix = "")
{
    for (const auto &[key, value] : doc.items()) {
        if (value.is_null())
            continue;
        if (value.is_object()) {
            print_text(out, value, prefix + key + ".");
            continue;
        }
        out << prefix << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else if (value.is_array() && value.size() == 2 && value[0].is_array()) {
            out << "[[" << value[0][0].get<std::string>() << "," << value[0][1].get<std::string>() << "],["
                << value[1][0].get<std::string>() << "," << value[1][1].get<std::string>() << "]]";
        } else
            out << value.dump();
        out << "\n";
    }
}

inline void emit(std::ostream &out, const json &doc, bool as_json)
{
    if (as_json)
        out << doc.dump(2) << "\n";
    else
        print_text(out, doc);
}

// --- subcommands ---------------------------------------------------------------

inline json decide_doc(const LocalRing &r, const Mat2 &a, int &code)
{
    CleanDecision d = decide_strongly_clean(a);
    json doc{{"command", "decide"}, {"ring", r.name()}, {"matrix", matrix_json(a)}, {"decision", to_string(d.status)}};
    doc["method"] = d.method ? json(to_string(*d.method)) : json(nullptr);
    bool verified = false;
    if (d.certificate) {
        json cert{{"E", matrix_json(d.certificate->E)}, {"U", matrix_json(d.certificate->U)}};
        verified = verify_certificate(a, *d.certificate);
        if (d.certificate->diag) {
            const auto &g = *d.certificate->diag;
            cert["diagonal"] = {{"t0", g.t0.to_string()}, {"t1", g.t1.to_string()}, {"P", matrix_json(g.P)}};
            verified = verified && verify_diagonal(a, g);
        }
        doc["certificate"] = cert;
    } else {
        doc["certificate"] = nullptr;
    }
    doc["witness"] = optional_string(d.witness);
    if (d.witness)
        verified = d.witness->in_W() && !find_roots(*d.witness, RootTargets::clean()).rootInJ;
    if (!verified)
        cleanmat::detail::contract_violation("decision failed re-verification");
    doc["verified"] = true;
    code = d.status == CleanStatus::NotClean ? kNegative : kOk;
    return doc;
}

inline json pi_doc(const LocalRing &r, const Mat2 &a, int &code)
{
    PiDecision d = decide_strongly_pi_regular(a);
    json doc{{"command", "pi"}, {"ring", r.name()}, {"matrix", matrix_json(a)}, {"decision", to_string(d.status)}};
    doc["method"] = d.method ? json(to_string(*d.method)) : json(nullptr);
    bool verified = false;
    switch (d.status) {
    case PiStatus::TrivialUnit:
        verified = r.is_local() ? is_invertible(a) : zmat::unimodular(zmat::det(zmat::entries(a)));
        break;
    case PiStatus::TrivialNilpotent: verified = pow(a, *d.nilpotency).is_zero(); break;
    case PiStatus::Nontrivial: verified = verify_pi_certificate(a, *d.certificate); break;
    case PiStatus::No: verified = true; break;
    }
    if (d.certificate)
        doc["certificate"] = {{"t0", d.certificate->t0.to_string()},
                              {"t1", d.certificate->t1.to_string()},
                              {"P", matrix_json(d.certificate->P)}};
    else
        doc["certificate"] = nullptr;
    doc["nilpotency_index"] = d.nilpotency ? json(*d.nilpotency) : json(nullptr);
    doc["witness"] = optional_string(d.witness);
    doc["witness_matrix"] = d.matrix_witness ? matrix_json(*d.matrix_witness) : json(nullptr);
    if (!verified)
        cleanmat::detail::contract_violation("decision failed re-verification");
    doc["verified"] = true;
    code = d.status == PiStatus::No ? kNegative : kOk;
    return doc;
}

inline json factor_doc(const LocalRing &r, const MonicQuadratic &f, int &code)
{
    json doc{{"command", "factor"}, {"ring", r.name()}, {"poly", f.to_string()},
             {"a1", f.a1.to_string()}, {"a0", f.a0.to_string()}};
    try {
        FactorizationWitness w = star_factorize(f);
        doc["decision"] = "Factored";
        doc["factors"] = {{"g0", poly_json(w.g0)}, {"g1", poly_json(w.g1)}, {"h0", poly_json(w.h0)},
                          {"h1", poly_json(w.h1)}};
        doc["starred"] = w.starred;
        doc["witness"] = nullptr;
        if (!verify_factorization(f, w))
            cleanmat::detail::contract_violation("factorization failed re-verification");
        code = kOk;
    } catch (const NoFactorizationError &e) {
        doc["decision"] = "NoFactorization";
        doc["factors"] = nullptr;
        doc["starred"] = false;
        doc["witness"] = e.witness().to_string();
        code = kNegative;
    }
    doc["verified"] = true;
    return doc;
}

inline json survey_doc(const LocalRing &r, const std::string &mode, std::optional<std::uint64_t> bound, int &code)
{
    RingVerdict v = mode == "pi" ? ring_is_m2_pi_regular(r) : ring_is_strongly_clean(r, bound);
    json doc{{"command", "survey"}, {"ring", r.name()}, {"mode", mode}, {"verdict", to_string(v.verdict)}};
    doc["witness"] = optional_string(v.witness);
    doc["witness_matrix"] = v.matrix_witness ? matrix_json(*v.matrix_witness) : json(nullptr);
    code = v.verdict == Verdict::Yes ? kOk : v.verdict == Verdict::No ? kNegative : kUnknown;
    return doc;
}

inline json classify_doc(const Mat2 &a, int &code)
{
    IntCleanClass c = classify_integer(a);
    json doc{{"command", "classify-int"}, {"ring", "Z"}, {"matrix", matrix_json(a)}, {"decision", to_string(c.tag)}};
    if (c.tag == IntCleanTag::Diag) {
        doc["diagonal"] = {{"d1", std::to_string(c.d1)}, {"d2", std::to_string(c.d2)}};
        doc["transform"] = matrix_json(*c.transform);
        LocalRing z = a.ring();
        if (!cleanmat::detail::conjugates_to(*c.transform, a, Mat2::diag(z.from_int(c.d1), z.from_int(c.d2))))
            cleanmat::detail::contract_violation("integer transform failed re-verification");
    } else {
        doc["diagonal"] = nullptr;
        doc["transform"] = nullptr;
    }
    doc["verified"] = true;
    code = c.tag == IntCleanTag::NotClean ? kNegative : kOk;
    return doc;
}

/// Re-parses an emitted document and re-checks its certificate.
inline bool verify_doc(const json &doc)
{
    const std::string command = doc.at("command");
    const LocalRing r = parse_ring(doc.at("ring").get<std::string>());
    if (command == "factor") {
        MonicQuadratic f{parse_element(r, doc.at("a1").get<std::string>()),
                         parse_element(r, doc.at("a0").get<std::string>())};
        if (doc.at("factors").is_null())
            return f.in_W() && !find_roots(f, RootTargets::clean()).rootInJ;
        const json &fs = doc.at("factors");
        FactorizationWitness w{poly_from_json(r, fs.at("g0")), poly_from_json(r, fs.at("g1")),
                               poly_from_json(r, fs.at("h0")), poly_from_json(r, fs.at("h1")),
                               doc.at("starred").get<bool>()};
        return verify_factorization(f, w);
    }
    const Mat2 a = matrix_from_json(r, doc.at("matrix"));
    const std::string decision = doc.at("decision");
    if (command == "decide") {
        if (decision == "NotClean") {
            CleanDecision d = decide_strongly_clean(a);
            return d.status == CleanStatus::NotClean && d.witness->to_string() == doc.at("witness").get<std::string>();
        }
        const json &c = doc.at("certificate");
        CleanCertificate cert{matrix_from_json(r, c.at("E")), matrix_from_json(r, c.at("U")), std::nullopt};
        if (c.contains("diagonal")) {
            const json &g = c.at("diagonal");
            cert.diag = DiagonalForm{parse_element(r, g.at("t0").get<std::string>()),
                                     parse_element(r, g.at("t1").get<std::string>()), matrix_from_json(r, g.at("P"))};
            if (!verify_diagonal(a, *cert.diag))
                return false;
        }
        return verify_certificate(a, cert);
    }
    if (command == "pi") {
        if (decision == "Nontrivial") {
            const json &c = doc.at("certificate");
            PiCertificate cert{parse_element(r, c.at("t0").get<std::string>()),
                               parse_element(r, c.at("t1").get<std::string>()), matrix_from_json(r, c.at("P"))};
            return verify_pi_certificate(a, cert);
        }
        if (decision == "TrivialNilpotent")
            return pow(a, doc.at("nilpotency_index").get<unsigned>()).is_zero();
        return to_string(decide_strongly_pi_regular(a).status) == decision;
    }
    if (command == "classify-int") {
        IntCleanClass c = classify_integer(a);
        if (to_string(c.tag) != decision)
            return false;
        if (c.tag != IntCleanTag::Diag)
            return true;
        const Mat2 p = matrix_from_json(r, doc.at("transform"));
        const json &g = doc.at("diagonal");
        return cleanmat::detail::conjugates_to(
            p, a, Mat2::diag(parse_element(r, g.at("d1").get<std::string>()), parse_element(r, g.at("d2").get<std::string>())));
    }
    throw ParseError(0, "unknown command '" + command + "' in document");
}

// --- selftest --------------------------------------------------------------------

inline unsigned thread_count()
{
    if (const char *env = std::getenv("CLEANMATRIX_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception &) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct SweepResult {
    std::uint64_t total = 0;
    std::uint64_t clean_agree = 0;
    std::uint64_t pi_agree = 0;
    std::vector<std::string> mismatches;
};

inline Mat2 matrix_at(const LocalRing &r, std::uint64_t idx, std::uint64_t n)
{
    std::array<std::uint64_t, 4> d;
    for (int i = 3; i >= 0; --i) {
        d[i] = idx % n;
        idx /= n;
    }
    return {r.element_at(d[0]), r.element_at(d[1]), r.element_at(d[2]), r.element_at(d[3])};
}

/// Every matrix over r, decided by clean2 and pi_regular and by the oracle.
inline SweepResult oracle_sweep(const LocalRing &r, unsigned threads)
{
    const std::uint64_t n = *r.cardinality();
    SweepResult result;
    result.total = n * n * n * n;
    // warm the shared caches before fanning out
    oracle::brute_clean(Mat2::zero(r));
    std::mutex mutex;
    std::exception_ptr failure;
    auto worker = [&](unsigned k) {
        SweepResult local;
        try {
            for (std::uint64_t idx = k; idx < result.total; idx += threads) {
                Mat2 a = matrix_at(r, idx, n);
                bool clean = decide_strongly_clean(a).status != CleanStatus::NotClean;
                bool brute = oracle::brute_clean(a).has_value();
                bool pi = decide_strongly_pi_regular(a).status != PiStatus::No;
                bool brute_pi = oracle::brute_pi(a).has_value();
                local.clean_agree += clean == brute;
                local.pi_agree += pi == brute_pi;
                if (clean != brute || pi != brute_pi)
                    local.mismatches.push_back(a.to_string());
            }
        } catch (...) {
            std::lock_guard lock(mutex);
            failure = std::current_exception();
        }
        std::lock_guard lock(mutex);
        result.clean_agree += local.clean_agree;
        result.pi_agree += local.pi_agree;
        result.mismatches.insert(result.mismatches.end(), local.mismatches.begin(), local.mismatches.end());
    };
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k)
        pool.emplace_back(worker, k);
    for (auto &t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    std::sort(result.mismatches.begin(), result.mismatches.end());
    return result;
}

inline int selftest(const std::vector<std::string> &rings, std::ostream &out)
{
    const unsigned threads = thread_count();
    bool all_agree = true;
    for (const auto &spec : rings) {
        LocalRing r = parse_ring(spec);
        if (!r.is_finite())
            throw Error(ErrorKind::InfiniteRing, "selftest needs a finite ring, got " + r.name());
        SweepResult s = oracle_sweep(r, threads);
        out << r.name() << ": clean " << s.clean_agree << "/" << s.total << " agree, pi " << s.pi_agree << "/"
            << s.total << " agree\n";
        for (const auto &m : s.mismatches)
            out << "  mismatch " << m << "\n";
        all_agree = all_agree && s.mismatches.empty();
    }
    return all_agree ? kOk : kFailure;
}

inline std::string read_input(const std::string &path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidSpec, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace detail

/// Runs one command line; everything goes to `out` and `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Strong cleanness and strong pi-regularity of 2x2 matrices over local rings", "cleanmat"};
    app.require_subcommand(1);

    std::string ring_text, matrix_text, poly_text, mode = "clean", input = "-";
    std::vector<std::string> selftest_rings;
    std::optional<std::uint64_t> bound;
    bool as_json = false;

    auto *decide = app.add_subcommand("decide", "decide strong cleanness of a matrix");
    auto *pi = app.add_subcommand("pi", "decide strong pi-regularity of a matrix");
    for (auto *sub : {decide, pi}) {
        sub->add_option("--ring", ring_text, "ring spec, e.g. Zmod(2,2)")->required();
        sub->add_option("--matrix", matrix_text, "matrix literal [[a,b],[c,d]]")->required();
        sub->add_flag("--json", as_json, "emit JSON");
    }
    auto *factor = app.add_subcommand("factor", "(*)/(**)-factorization of t^2 + t*a1 + a0");
    factor->add_option("--ring", ring_text, "ring spec")->required();
    factor->add_option("--poly", poly_text, "coefficients a1,a0")->required();
    factor->add_flag("--json", as_json, "emit JSON");
    auto *survey = app.add_subcommand("survey", "ring-level verdict for M_2(R)");
    survey->add_option("--ring", ring_text, "ring spec")->required();
    survey->add_option("--mode", mode, "clean or pi")->check(CLI::IsMember({"clean", "pi"}));
    survey->add_option("--bound", bound, "witness scan bound for Z_(p)");
    survey->add_flag("--json", as_json, "emit JSON");
    auto *classify = app.add_subcommand("classify-int", "strong-cleanness class of an integer matrix");
    classify->add_option("--matrix", matrix_text, "matrix literal")->required();
    classify->add_flag("--json", as_json, "emit JSON");
    auto *self = app.add_subcommand("selftest", "exhaustive agreement of decisions with the brute-force oracle");
    self->add_option("--ring", selftest_rings, "ring spec (repeatable)");
    auto *verify = app.add_subcommand("verify", "re-verify an emitted JSON document");
    verify->group("");
    verify->add_option("--input", input, "file with the JSON document, - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        int code = kOk;
        if (decide->parsed() || pi->parsed()) {
            LocalRing r = parse_ring(ring_text);
            Mat2 a = parse_matrix(r, matrix_text);
            detail::emit(out, decide->parsed() ? detail::decide_doc(r, a, code) : detail::pi_doc(r, a, code), as_json);
        } else if (factor->parsed()) {
            LocalRing r = parse_ring(ring_text);
            auto coeffs = parse_element_list(r, poly_text);
            if (coeffs.size() != 2)
                throw ParseError(0, "--poly needs exactly two coefficients a1,a0");
            detail::emit(out, detail::factor_doc(r, {coeffs[0], coeffs[1]}, code), as_json);
        } else if (survey->parsed()) {
            LocalRing r = parse_ring(ring_text);
            detail::emit(out, detail::survey_doc(r, mode, bound, code), as_json);
        } else if (classify->parsed()) {
            LocalRing z = LocalRing::make(RingSpec::integers());
            detail::emit(out, detail::classify_doc(parse_matrix(z, matrix_text), code), as_json);
        } else if (self->parsed()) {
            if (selftest_rings.empty())
                selftest_rings = {"Zmod(2,2)", "GF(2,1)", "GF(2,2)", "Trunc(GF(2,1),2)"};
            code = detail::selftest(selftest_rings, out);
        } else if (verify->parsed()) {
            json doc = json::parse(detail::read_input(input));
            bool ok = detail::verify_doc(doc);
            out << "verified: " << (ok ? "true" : "false") << "\n";
            code = ok ? kOk : kNegative;
        }
        return code;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception &e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::OwnerMismatch || e.kind() == ErrorKind::InvalidSpec ? kUsage : kFailure;
    }
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv{"cleanmat"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace cleanmat::cli
