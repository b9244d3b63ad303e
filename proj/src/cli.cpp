#include "ellip/cli.hpp"

#include "ellip/buildings.hpp"
#include "ellip/embedding.hpp"
#include "ellip/indices.hpp"
#include "ellip/io.hpp"
#include "ellip/spectrum.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>

namespace ellip::cli {

namespace {

using io::Json;

constexpr std::int64_t kDefaultMaxK = 10000;

std::int64_t parse_positive_int(const std::string& text, const std::string& what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
        throw std::invalid_argument(what + " must be a positive integer, got '" + text + "'");
    return value;
}

// Flag wins over ET_MAX_K wins over the built-in default.
std::int64_t resolve_max_k(const CLI::Option* opt, std::int64_t flag_value) {
    if (opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("ET_MAX_K")) return parse_positive_int(env, "ET_MAX_K");
    return kDefaultMaxK;
}

Orbit parse_orbit_arg(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--orbit expects 'axis,multiplicity', got '" + text + "'");
    return Orbit{static_cast<int>(parse_positive_int(text.substr(0, comma), "orbit axis")),
                 parse_positive_int(text.substr(comma + 1), "orbit multiplicity")};
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string piece = comma == std::string::npos ? text.substr(start)
                                                       : text.substr(start, comma - start);
        out.push_back(static_cast<int>(parse_positive_int(piece, "index in --I")));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

enum class Format { Json, Tsv };

Format parse_format(const std::string& text, bool tsv_supported) {
    if (text == "json") return Format::Json;
    if (text == "tsv") {
        if (!tsv_supported)
            throw std::invalid_argument("this subcommand only supports --format json");
        return Format::Tsv;
    }
    throw std::invalid_argument("unknown format '" + text + "' (expected json or tsv)");
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json verdict_summary(const CompactnessReport& report) {
    Json per_l = Json::array();
    for (const CompactnessEntry& e : report.per_l) {
        per_l.push_back({{"l", e.l},
                         {"verdict", e.verdict == CompactnessVerdict::UniqueTrivial
                                         ? "unique_trivial"
                                         : "candidates"},
                         {"truncated", e.truncated}});
    }
    return per_l;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic toolkit for ellipsoid Reeb spectra and embeddings"};
    app.name("ellip");
    app.require_subcommand(1);

    // spectrum
    auto* sub_spectrum = app.add_subcommand("spectrum", "action spectrum up to a bound");
    std::string sp_ellipsoid, sp_bound, sp_format = "tsv";
    bool sp_hint = false;
    sub_spectrum->add_option("--ellipsoid", sp_ellipsoid, "axes, e.g. 1,8/5")->required();
    sub_spectrum->add_option("--bound", sp_bound, "action bound (rational)")->required();
    sub_spectrum->add_option("--format", sp_format, "json or tsv");
    sub_spectrum->add_flag("--decimal-hint", sp_hint, "append approximate decimal column");

    // cz
    auto* sub_cz = app.add_subcommand("cz", "Conley-Zehnder index of one orbit, both routes");
    std::string cz_ellipsoid, cz_orbit, cz_format = "json";
    sub_cz->add_option("--ellipsoid", cz_ellipsoid)->required();
    sub_cz->add_option("--orbit", cz_orbit, "axis,multiplicity")->required();
    sub_cz->add_option("--format", cz_format, "json");

    // nk
    auto* sub_nk = app.add_subcommand("nk", "lattice value sequence N_0..N_{count-1}");
    std::string nk_a, nk_b, nk_format = "tsv";
    std::int64_t nk_count = 0;
    bool nk_hint = false;
    sub_nk->add_option("--a", nk_a)->required();
    sub_nk->add_option("--b", nk_b)->required();
    sub_nk->add_option("--count", nk_count, "number of values")->required()
        ->check(CLI::PositiveNumber);
    sub_nk->add_option("--format", nk_format, "json or tsv");
    sub_nk->add_flag("--decimal-hint", nk_hint);

    // embeds
    auto* sub_embeds = app.add_subcommand("embeds", "4D embedding criterion verdict");
    std::string em_source, em_target, em_format = "json";
    std::int64_t em_max_k = 0;
    sub_embeds->add_option("--source", em_source)->required();
    sub_embeds->add_option("--target", em_target)->required();
    auto* em_k_opt = sub_embeds->add_option("--max-k", em_max_k)->check(CLI::NonNegativeNumber);
    sub_embeds->add_option("--format", em_format, "json");

    // capacity
    auto* sub_capacity = app.add_subcommand("capacity", "ball-packing capacity lower bound");
    std::string cap_a, cap_format = "json";
    std::int64_t cap_max_k = 0;
    bool cap_hint = false;
    sub_capacity->add_option("--a", cap_a)->required();
    auto* cap_k_opt = sub_capacity->add_option("--max-k", cap_max_k)->check(CLI::PositiveNumber);
    sub_capacity->add_option("--format", cap_format, "json");
    sub_capacity->add_flag("--decimal-hint", cap_hint);

    // staircase
    auto* sub_staircase = app.add_subcommand("staircase", "capacity samples over a range");
    std::string st_from, st_to, st_step, st_format = "tsv";
    std::int64_t st_max_k = 0;
    bool st_hint = false;
    sub_staircase->add_option("--from", st_from)->required();
    sub_staircase->add_option("--to", st_to)->required();
    sub_staircase->add_option("--step", st_step)->required();
    auto* st_k_opt = sub_staircase->add_option("--max-k", st_max_k)->check(CLI::PositiveNumber);
    sub_staircase->add_option("--format", st_format, "json or tsv");
    sub_staircase->add_flag("--decimal-hint", st_hint);

    // check
    auto* sub_check = app.add_subcommand("check", "hypothesis report for a pair");
    std::string ch_source, ch_target, ch_format = "json";
    bool ch_transversality = false;
    sub_check->add_option("--source", ch_source)->required();
    sub_check->add_option("--target", ch_target)->required();
    sub_check->add_flag("--transversality", ch_transversality,
                        "check the transversality hypotheses instead of the main ones");
    sub_check->add_option("--format", ch_format, "json");

    // index dim
    auto* sub_index = app.add_subcommand("index", "index formulas");
    sub_index->require_subcommand(1);
    auto* sub_index_dim = sub_index->add_subcommand("dim", "moduli space dimension");
    std::string ix_source, ix_target, ix_I;
    int ix_dimP = 0;
    sub_index_dim->add_option("--dimP", ix_dimP)->required()->check(CLI::NonNegativeNumber);
    sub_index_dim->add_option("--source", ix_source)->required();
    sub_index_dim->add_option("--target", ix_target)->required();
    sub_index_dim->add_option("--I", ix_I, "axis indices, e.g. 1,2")->required();

    // buildings
    auto* sub_buildings = app.add_subcommand("buildings", "enumerate candidate limit buildings");
    std::string bu_source, bu_target, bu_format = "json";
    int bu_l = 0, bu_dimP = 0, bu_max_orbits = 0, bu_max_levels = 4;
    sub_buildings->add_option("--source", bu_source)->required();
    sub_buildings->add_option("--target", bu_target)->required();
    sub_buildings->add_option("--l", bu_l)->required()->check(CLI::PositiveNumber);
    sub_buildings->add_option("--dimP", bu_dimP)->required()->check(CLI::NonNegativeNumber);
    sub_buildings->add_option("--max-orbits", bu_max_orbits)->check(CLI::NonNegativeNumber);
    sub_buildings->add_option("--max-levels", bu_max_levels)->check(CLI::PositiveNumber);
    sub_buildings->add_option("--format", bu_format, "json");

    // verify-compactness
    auto* sub_verify = app.add_subcommand("verify-compactness", "per-axis building verdicts");
    std::string vc_source, vc_target, vc_format = "json";
    int vc_dimP = 0, vc_max_orbits = 0, vc_max_levels = 4;
    sub_verify->add_option("--source", vc_source)->required();
    sub_verify->add_option("--target", vc_target)->required();
    sub_verify->add_option("--dimP", vc_dimP)->required()->check(CLI::NonNegativeNumber);
    sub_verify->add_option("--max-orbits", vc_max_orbits)->check(CLI::NonNegativeNumber);
    sub_verify->add_option("--max-levels", vc_max_levels)->check(CLI::PositiveNumber);
    sub_verify->add_option("--format", vc_format, "json");

    // neck-verify
    auto* sub_neck = app.add_subcommand(
        "neck-verify", "scale factor, CZ invariance, seed verdicts, parity conclusion");
    std::string nv_source, nv_target, nv_format = "json";
    int nv_max_orbits = 0, nv_max_levels = 4;
    sub_neck->add_option("--source", nv_source)->required();
    sub_neck->add_option("--target", nv_target)->required();
    sub_neck->add_option("--max-orbits", nv_max_orbits)->check(CLI::NonNegativeNumber);
    sub_neck->add_option("--max-levels", nv_max_levels)->check(CLI::PositiveNumber);
    sub_neck->add_option("--format", nv_format, "json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*sub_spectrum) {
            Format format = parse_format(sp_format, true);
            Ellipsoid E = Ellipsoid::parse(sp_ellipsoid);
            Rat bound = Rat::parse(sp_bound);
            if (bound.sign() < 0) throw std::invalid_argument("--bound must be >= 0");
            std::vector<SpectrumEntry> entries = spectrum(E, bound);
            if (format == Format::Tsv) {
                out << io::spectrum_to_tsv(entries, sp_hint);
            } else {
                Json j{{"ellipsoid", E.to_string()},
                       {"bound", bound.to_string()},
                       {"entries", io::spectrum_to_json(entries)}};
                emit(out, j);
            }
        } else if (*sub_cz) {
            parse_format(cz_format, false);
            Ellipsoid E = Ellipsoid::parse(cz_ellipsoid);
            Orbit orbit = parse_orbit_arg(cz_orbit);
            Rat action = orbit_action(E, orbit);
            Json j{{"cz_floor", cz_floor(E, orbit)},
                   {"cz_spec", cz_spec(E, orbit)},
                   {"degenerate", !degeneracy_check(E, action).empty()}};
            emit(out, j);
        } else if (*sub_nk) {
            Format format = parse_format(nk_format, true);
            Rat a = Rat::parse(nk_a);
            Rat b = Rat::parse(nk_b);
            std::vector<Rat> values = nk_values(a, b, nk_count - 1);
            if (format == Format::Tsv) {
                out << io::nk_to_tsv(values, nk_hint);
            } else {
                Json list = Json::array();
                for (const Rat& v : values) list.push_back(v.to_string());
                emit(out, Json{{"a", a.to_string()}, {"b", b.to_string()}, {"values", list}});
            }
        } else if (*sub_embeds) {
            parse_format(em_format, false);
            std::int64_t K = resolve_max_k(em_k_opt, em_max_k);
            Ellipsoid source = Ellipsoid::parse(em_source);
            Ellipsoid target = Ellipsoid::parse(em_target);
            EmbedVerdict verdict = embeds_4d(source, target, K);
            Json j = io::embed_verdict_to_json(verdict);
            j["source"] = source.to_string();
            j["target"] = target.to_string();
            j["max_k"] = K;
            emit(out, j);
        } else if (*sub_capacity) {
            parse_format(cap_format, false);
            std::int64_t K = resolve_max_k(cap_k_opt, cap_max_k);
            Rat a = Rat::parse(cap_a);
            CapacityResult result = capacity_c0(a, K);
            Json j = io::capacity_to_json(result);
            j["a"] = a.to_string();
            j["max_k"] = K;
            if (cap_hint) j["c0_lower_approx_non_authoritative"] = result.value.decimal_approx();
            emit(out, j);
        } else if (*sub_staircase) {
            Format format = parse_format(st_format, true);
            std::int64_t K = resolve_max_k(st_k_opt, st_max_k);
            std::vector<StaircaseRow> rows =
                staircase_table(Rat::parse(st_from), Rat::parse(st_to), Rat::parse(st_step), K);
            if (format == Format::Tsv) {
                out << io::staircase_to_tsv(rows, st_hint);
            } else {
                Json list = Json::array();
                for (const StaircaseRow& row : rows) {
                    Json r{{"a", row.a.to_string()},
                           {"c0_lower", row.c0_lower.to_string()},
                           {"argmax_k", row.argmax_k}};
                    if (st_hint)
                        r["c0_lower_approx_non_authoritative"] = row.c0_lower.decimal_approx();
                    list.push_back(r);
                }
                emit(out, Json{{"max_k", K}, {"rows", list}});
            }
        } else if (*sub_check) {
            parse_format(ch_format, false);
            Ellipsoid source = Ellipsoid::parse(ch_source);
            Ellipsoid target = Ellipsoid::parse(ch_target);
            HypothesisReport report = ch_transversality
                                          ? check_transversality_hypotheses(source, target)
                                          : check_main_hypotheses(source, target);
            emit(out, io::hypothesis_report_to_json(report));
        } else if (*sub_index_dim) {
            Ellipsoid source = Ellipsoid::parse(ix_source);
            Ellipsoid target = Ellipsoid::parse(ix_target);
            try {
                out << moduli_dimension(ix_dimP, source, target, parse_index_list(ix_I)) << '\n';
            } catch (const HypothesisError& e) {
                err << "error: " << e.what() << "; report: "
                    << io::hypothesis_report_to_json(e.report()).dump() << '\n';
                return 2;
            }
        } else if (*sub_buildings) {
            parse_format(bu_format, false);
            Ellipsoid source = Ellipsoid::parse(bu_source);
            Ellipsoid target = Ellipsoid::parse(bu_target);
            BuildingEnumeration result = enumerate_buildings(
                source, target, bu_l, bu_dimP, EnumerationBudgets{bu_max_orbits, bu_max_levels});
            Json list = Json::array();
            for (const Building& b : result.buildings) list.push_back(io::building_to_json(b));
            Json j{{"source", source.to_string()}, {"target", target.to_string()},
                   {"l", bu_l},                    {"dimP", bu_dimP},
                   {"buildings", list},            {"truncated", result.truncated}};
            emit(out, j);
            if (result.truncated) return 1;
        } else if (*sub_verify) {
            parse_format(vc_format, false);
            Ellipsoid source = Ellipsoid::parse(vc_source);
            Ellipsoid target = Ellipsoid::parse(vc_target);
            CompactnessReport report = verify_compactness(
                source, target, vc_dimP, EnumerationBudgets{vc_max_orbits, vc_max_levels});
            Json j = io::compactness_report_to_json(report);
            j["source"] = source.to_string();
            j["target"] = target.to_string();
            j["dimP"] = vc_dimP;
            emit(out, j);
            for (const CompactnessEntry& e : report.per_l)
                if (e.truncated) return 1;
        } else if (*sub_neck) {
            parse_format(nv_format, false);
            Ellipsoid source = Ellipsoid::parse(nv_source);
            Ellipsoid target = Ellipsoid::parse(nv_target);
            NeckStretchSetup setup = neck_stretch_setup(source, target);
            // The parity seed is the glued one-cylinder count for the scaled
            // copy sitting inside the target, certified by compactness of the
            // unparametrized problem.
            CompactnessReport seed_report = verify_compactness(
                setup.scaled_target, target, 0, EnumerationBudgets{nv_max_orbits, nv_max_levels});
            bool seed = seed_report.all_unique_trivial() && setup.cz_equal;
            ParityReport parity = parity_ledger(seed);
            Json j = io::neck_setup_to_json(setup);
            j["source"] = source.to_string();
            j["target"] = target.to_string();
            j["seed_verdicts"] = verdict_summary(seed_report);
            j["parity"] = io::parity_to_json(parity);
            emit(out, j);
            for (const CompactnessEntry& e : seed_report.per_l)
                if (e.truncated) return 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return out.good() ? 0 : 1;
}

}  // namespace ellip::cli
