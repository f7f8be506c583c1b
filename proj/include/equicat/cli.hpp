// Command-line driver: validate, map, roundtrip, gen, suite.
//
// Exit codes: 0 success / certified, 1 validation or certification failure,
// 2 usage or parse error. Reports are line-oriented, one violation per
// line, in stable order; no command ever terminates by exception.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "equicat/categories.hpp"
#include "equicat/functors.hpp"
#include "equicat/genrand.hpp"
#include "equicat/io.hpp"

namespace equicat {

namespace detail {

inline void print_violations(const Violations& v, std::ostream& out) {
    for (const auto& viol : v) out << viol.str() << "\n";
}

inline int cmd_validate(const std::string& file, std::ostream& out, std::ostream&) {
    Document doc = load_document(file);
    struct Dispatch {
        Violations operator()(const CObject& x) const { return validate_c_object(x); }
        Violations operator()(const A2Object& e) const { return validate_a2_object(e); }
        Violations operator()(const A1Object& p) const { return validate_a1_object(p); }
        Violations operator()(const CMorphism& f) const { return validate_c_morphism(f); }
        Violations operator()(const A2Morphism& f) const { return validate_a2_morphism(f); }
    };
    Violations v = std::visit(Dispatch{}, doc);
    if (v.empty()) {
        out << "ok: " << kind_name(doc) << "\n";
        return 0;
    }
    print_violations(v, out);
    return 1;
}

inline int cmd_map(const std::string& functor, const std::string& file, std::ostream& out,
                   std::ostream& err) {
    Document doc = load_document(file);
    bool want_s = functor == "s";
    struct Dispatch {
        bool want_s;
        std::optional<Document> operator()(const CObject& x) const {
            if (want_s) return Document(s_on_object(x));
            return std::nullopt;
        }
        std::optional<Document> operator()(const CMorphism& f) const {
            if (want_s) return Document(s_on_morphism(f));
            return std::nullopt;
        }
        std::optional<Document> operator()(const A2Object& e) const {
            if (!want_s) return Document(t_on_object(e));
            return std::nullopt;
        }
        std::optional<Document> operator()(const A2Morphism& f) const {
            if (!want_s) return Document(t_on_morphism(f));
            return std::nullopt;
        }
        std::optional<Document> operator()(const A1Object&) const { return std::nullopt; }
    };
    std::optional<Document> result = std::visit(Dispatch{want_s}, doc);
    if (!result) {
        err << "error: functor " << functor << " does not apply to a " << kind_name(doc)
            << " document (s: c-object/c-morphism, t: a2-object/a2-morphism)\n";
        return 2;
    }
    out << serialize(*result);
    return 0;
}

inline int cmd_roundtrip(const std::string& file, std::ostream& out, std::ostream& err) {
    Document doc = load_document(file);
    struct Dispatch {
        std::pair<const char*, NaturalityCertificate> operator()(const CObject& x) const {
            return {"ts-identity", certify_ts_identity(x)};
        }
        std::pair<const char*, NaturalityCertificate> operator()(const CMorphism& f) const {
            return {"ts-identity", certify_ts_identity(f.source, {&f, 1})};
        }
        std::pair<const char*, NaturalityCertificate> operator()(const A2Object& e) const {
            return {"st-isomorphism", certify_st_isomorphism(e)};
        }
        std::pair<const char*, NaturalityCertificate> operator()(const A2Morphism& f) const {
            return {"st-naturality", certify_naturality(f)};
        }
        std::pair<const char*, NaturalityCertificate> operator()(const A1Object&) const {
            return {"", {}};
        }
    };
    auto [label, cert] = std::visit(Dispatch{}, doc);
    if (std::string(label).empty()) {
        err << "error: roundtrip does not apply to a1-object documents\n";
        return 2;
    }
    if (cert.certified()) {
        out << "certified: " << label << "\n";
        return 0;
    }
    print_violations(cert.all(), out);
    return 1;
}

inline int cmd_gen(const std::string& kind, std::uint64_t seed, std::size_t max_dim,
                   std::ostream& out, std::ostream&) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_ambient_dim = max_dim;
    Rng rng = make_rng(cfg);
    Document doc = kind == "c" ? Document(random_c_object(rng, cfg))
                               : Document(random_a2_object(rng, cfg));
    out << serialize(doc);
    return 0;
}

struct SuiteSection {
    std::string name;
    std::size_t certified = 0;
    std::size_t total = 0;
    std::vector<std::string> details;  // capped; suite output must stay bounded

    void record(std::size_t sample, const Violations& v) {
        ++total;
        if (v.empty()) {
            ++certified;
            return;
        }
        if (details.size() < 5)
            details.push_back("  sample " + std::to_string(sample) + ": " + v.front().str());
        else if (details.size() == 5)
            details.push_back("  ...");
    }
};

/// Runs every certification family over freshly generated samples. Sample i
/// of section k draws from Rng::substream(mix64(seed + k + 1), i), so the
/// report is identical across runs and platforms and each sample is
/// independent of all others.
inline int cmd_suite(std::size_t samples, std::uint64_t seed, std::ostream& out, std::ostream&) {
    GenConfig cfg;  // defaults: ambient <= 6, entries <= 3
    std::vector<SuiteSection> sections;
    auto section_rng = [&](std::size_t k, std::size_t i) {
        return Rng::substream(mix64(seed + k + 1), i);
    };

    SuiteSection s_val{"s-image-validity"};
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng = section_rng(0, i);
        s_val.record(i, validate_a2_object(s_on_object(random_c_object(rng, cfg))));
    }
    sections.push_back(std::move(s_val));

    SuiteSection t_val{"t-image-validity"};
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng = section_rng(1, i);
        t_val.record(i, validate_c_object(t_on_object(random_a2_object(rng, cfg))));
    }
    sections.push_back(std::move(t_val));

    SuiteSection ts{"ts-identity"};
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng = section_rng(2, i);
        CObject x = random_c_object(rng, cfg);
        CMorphism f = random_c_morphism(rng, cfg);
        NaturalityCertificate obj_cert = certify_ts_identity(x);
        NaturalityCertificate mor_cert = certify_ts_identity(f.source, {&f, 1});
        Violations v = obj_cert.all();
        for (auto& viol : mor_cert.all()) v.push_back(viol);
        ts.record(i, v);
    }
    sections.push_back(std::move(ts));

    SuiteSection st{"st-isomorphism"};
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng = section_rng(3, i);
        st.record(i, certify_st_isomorphism(random_a2_object(rng, cfg)).all());
    }
    sections.push_back(std::move(st));

    SuiteSection nat{"naturality"};
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng = section_rng(4, i);
        nat.record(i, certify_naturality(random_a2_morphism(rng, cfg)).all());
    }
    sections.push_back(std::move(nat));

    SuiteSection laws{"functor-laws"};
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng = section_rng(5, i);
        auto c_pair = random_composable_c_pair(rng, cfg);
        auto a2_pair = random_composable_a2_pair(rng, cfg);
        laws.record(i, certify_functoriality({&c_pair, 1}, {&a2_pair, 1}).all());
    }
    sections.push_back(std::move(laws));

    bool all_ok = true;
    for (const auto& s : sections) {
        out << s.name << ": " << s.certified << "/" << s.total << " certified\n";
        for (const auto& d : s.details) out << d << "\n";
        all_ok = all_ok && s.certified == s.total;
    }
    out << (all_ok ? "suite: certified\n" : "suite: FAILED\n");
    return all_ok ? 0 : 1;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for the equivalence between subspace quadruples and triples"};
    app.name("equicat");
    app.require_subcommand(1);

    std::string validate_file;
    CLI::App* validate = app.add_subcommand("validate", "Run the validator for a document");
    validate->add_option("file", validate_file, "JSON document")->required();

    std::string map_functor;
    std::string map_file;
    CLI::App* map = app.add_subcommand("map", "Apply a functor to a document");
    map->add_option("--functor", map_functor, "Which functor (s or t)")
        ->required()
        ->check(CLI::IsMember({"s", "t"}));
    map->add_option("file", map_file, "JSON document")->required();

    std::string roundtrip_file;
    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "Certify the equivalence round trip on a document");
    roundtrip->add_option("file", roundtrip_file, "JSON document")->required();

    std::string gen_kind;
    std::uint64_t gen_seed = 0;
    std::size_t gen_max_dim = 6;
    CLI::App* gen = app.add_subcommand("gen", "Generate a random valid object");
    gen->add_option("--kind", gen_kind, "Object kind (c or a2)")
        ->required()
        ->check(CLI::IsMember({"c", "a2"}));
    gen->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen->add_option("--max-dim", gen_max_dim, "Maximum ambient dimension");

    std::size_t suite_samples = 500;
    std::uint64_t suite_seed = 42;
    CLI::App* suite = app.add_subcommand("suite", "Certify all properties on random samples");
    suite->add_option("--samples", suite_samples, "Samples per section");
    suite->add_option("--seed", suite_seed, "PRNG seed");

    try {
        std::vector<const char*> argv;
        argv.push_back("equicat");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return detail::cmd_validate(validate_file, out, err);
        if (*map) return detail::cmd_map(map_functor, map_file, out, err);
        if (*roundtrip) return detail::cmd_roundtrip(roundtrip_file, out, err);
        if (*gen) return detail::cmd_gen(gen_kind, gen_seed, gen_max_dim, out, err);
        if (*suite) return detail::cmd_suite(suite_samples, suite_seed, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RetryLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        // Functor application on input that fails its validator.
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace equicat
