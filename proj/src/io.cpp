#include "ellip/io.hpp"

#include <stdexcept>

namespace ellip::io {

namespace {

const char* kind_name(LevelKind kind) {
    switch (kind) {
        case LevelKind::SympTop: return "symp_top";
        case LevelKind::Cobordism: return "cobordism";
        case LevelKind::SympBottom: return "symp_bottom";
    }
    throw std::logic_error("unreachable level kind");
}

LevelKind kind_from_name(const std::string& name) {
    if (name == "symp_top") return LevelKind::SympTop;
    if (name == "cobordism") return LevelKind::Cobordism;
    if (name == "symp_bottom") return LevelKind::SympBottom;
    throw std::invalid_argument("unknown level kind '" + name + "'");
}

const char* verdict_name(CompactnessVerdict v) {
    return v == CompactnessVerdict::UniqueTrivial ? "unique_trivial" : "candidates";
}

CompactnessVerdict verdict_from_name(const std::string& name) {
    if (name == "unique_trivial") return CompactnessVerdict::UniqueTrivial;
    if (name == "candidates") return CompactnessVerdict::Candidates;
    throw std::invalid_argument("unknown verdict '" + name + "'");
}

}  // namespace

Json hypothesis_report_to_json(const HypothesisReport& report) {
    Json failures = Json::array();
    for (const HypothesisFailure& f : report.failures) {
        failures.push_back({{"name", f.name},
                            {"index", f.index},
                            {"lhs", f.lhs.to_string()},
                            {"rhs", f.rhs.to_string()},
                            {"boundary", f.boundary}});
    }
    return Json{{"satisfied", report.satisfied}, {"failures", failures}};
}

HypothesisReport hypothesis_report_from_json(const Json& j) {
    HypothesisReport report;
    report.satisfied = j.at("satisfied").get<bool>();
    for (const Json& f : j.at("failures")) {
        report.failures.push_back(HypothesisFailure{
            f.at("name").get<std::string>(), f.at("index").get<int>(),
            Rat::parse(f.at("lhs").get<std::string>()),
            Rat::parse(f.at("rhs").get<std::string>()), f.at("boundary").get<bool>()});
    }
    return report;
}

Json spectrum_to_json(const std::vector<SpectrumEntry>& entries) {
    Json out = Json::array();
    for (const SpectrumEntry& e : entries) {
        out.push_back({{"action", e.action.to_string()},
                       {"axis", e.orbit.axis},
                       {"multiplicity", e.orbit.multiplicity}});
    }
    return out;
}

std::vector<SpectrumEntry> spectrum_from_json(const Json& j) {
    std::vector<SpectrumEntry> entries;
    for (const Json& e : j) {
        entries.push_back(SpectrumEntry{
            Rat::parse(e.at("action").get<std::string>()),
            Orbit{e.at("axis").get<int>(), e.at("multiplicity").get<std::int64_t>()}});
    }
    return entries;
}

Json embed_verdict_to_json(const EmbedVerdict& verdict) {
    Json j;
    switch (verdict.outcome) {
        case EmbedOutcome::Embeds: j["outcome"] = "embeds"; break;
        case EmbedOutcome::Fails: j["outcome"] = "fails"; break;
        case EmbedOutcome::PassUpToK: j["outcome"] = "pass_up_to_k"; break;
    }
    j["witness_k"] = verdict.witness_k ? Json(*verdict.witness_k) : Json(nullptr);
    j["checked_up_to"] = verdict.checked_up_to;
    j["cutoff_k"] = verdict.cutoff_k ? Json(verdict.cutoff_k->str()) : Json(nullptr);
    return j;
}

EmbedVerdict embed_verdict_from_json(const Json& j) {
    EmbedVerdict v;
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "embeds")
        v.outcome = EmbedOutcome::Embeds;
    else if (outcome == "fails")
        v.outcome = EmbedOutcome::Fails;
    else if (outcome == "pass_up_to_k")
        v.outcome = EmbedOutcome::PassUpToK;
    else
        throw std::invalid_argument("unknown outcome '" + outcome + "'");
    if (!j.at("witness_k").is_null()) v.witness_k = j.at("witness_k").get<std::int64_t>();
    v.checked_up_to = j.at("checked_up_to").get<std::int64_t>();
    if (!j.at("cutoff_k").is_null()) v.cutoff_k = BigInt(j.at("cutoff_k").get<std::string>());
    return v;
}

Json capacity_to_json(const CapacityResult& result) {
    return Json{{"c0_lower", result.value.to_string()}, {"argmax_k", result.argmax_k}};
}

CapacityResult capacity_from_json(const Json& j) {
    return CapacityResult{Rat::parse(j.at("c0_lower").get<std::string>()),
                          j.at("argmax_k").get<std::int64_t>()};
}

Json collection_to_json(const OrbitCollection& collection) {
    Json orbits = Json::array();
    for (const Orbit& o : collection.orbits)
        orbits.push_back(Json::array({o.axis, o.multiplicity}));
    return Json{{"orbits", orbits}, {"action", collection.total_action.to_string()}};
}

OrbitCollection collection_from_json(const Json& j) {
    OrbitCollection collection;
    for (const Json& o : j.at("orbits"))
        collection.orbits.push_back(Orbit{o.at(0).get<int>(), o.at(1).get<std::int64_t>()});
    collection.total_action = Rat::parse(j.at("action").get<std::string>());
    return collection;
}

Json building_to_json(const Building& building) {
    Json levels = Json::array();
    for (const Level& level : building.levels) {
        levels.push_back({{"kind", kind_name(level.kind)},
                          {"gamma_plus", collection_to_json(level.gamma_plus)},
                          {"gamma_minus", collection_to_json(level.gamma_minus)},
                          {"energy", level_energy(level).to_string()}});
    }
    return Json{{"levels", levels}};
}

Building building_from_json(const Json& j) {
    Building building;
    for (const Json& level : j.at("levels")) {
        building.levels.push_back(Level{kind_from_name(level.at("kind").get<std::string>()),
                                        collection_from_json(level.at("gamma_plus")),
                                        collection_from_json(level.at("gamma_minus"))});
    }
    return building;
}

Json compactness_report_to_json(const CompactnessReport& report) {
    Json per_l = Json::array();
    for (const CompactnessEntry& entry : report.per_l) {
        Json buildings = Json::array();
        for (const Building& b : entry.buildings) buildings.push_back(building_to_json(b));
        per_l.push_back({{"l", entry.l},
                         {"verdict", verdict_name(entry.verdict)},
                         {"buildings", buildings},
                         {"truncated", entry.truncated}});
    }
    return Json{{"per_l", per_l},
                {"main_hypotheses", hypothesis_report_to_json(report.main_hypotheses)},
                {"transversality_hypotheses",
                 hypothesis_report_to_json(report.transversality_hypotheses)}};
}

CompactnessReport compactness_report_from_json(const Json& j) {
    CompactnessReport report;
    for (const Json& entry : j.at("per_l")) {
        CompactnessEntry e;
        e.l = entry.at("l").get<int>();
        e.verdict = verdict_from_name(entry.at("verdict").get<std::string>());
        for (const Json& b : entry.at("buildings")) e.buildings.push_back(building_from_json(b));
        e.truncated = entry.at("truncated").get<bool>();
        report.per_l.push_back(std::move(e));
    }
    report.main_hypotheses = hypothesis_report_from_json(j.at("main_hypotheses"));
    report.transversality_hypotheses =
        hypothesis_report_from_json(j.at("transversality_hypotheses"));
    return report;
}

Json parity_to_json(const ParityReport& report) {
    return Json{{"seed_certified", report.seed_certified},
                {"identity", report.identity},
                {"conclusion",
                 report.conclusion == ParityConclusion::BothOdd ? "both_odd" : "unknown"}};
}

ParityReport parity_from_json(const Json& j) {
    ParityReport report;
    report.seed_certified = j.at("seed_certified").get<bool>();
    report.identity = j.at("identity").get<std::string>();
    const std::string conclusion = j.at("conclusion").get<std::string>();
    if (conclusion == "both_odd")
        report.conclusion = ParityConclusion::BothOdd;
    else if (conclusion == "unknown")
        report.conclusion = ParityConclusion::Unknown;
    else
        throw std::invalid_argument("unknown parity conclusion '" + conclusion + "'");
    return report;
}

Json neck_setup_to_json(const NeckStretchSetup& setup) {
    Json table = Json::array();
    for (const CzScaleCheck& row : setup.cz_table) {
        table.push_back(
            {{"axis", row.axis}, {"cz_target", row.cz_target}, {"cz_scaled", row.cz_scaled}});
    }
    return Json{{"epsilon", setup.epsilon.to_string()},
                {"scaled_target", setup.scaled_target.to_string()},
                {"cz_table", table},
                {"cz_equal", setup.cz_equal}};
}

NeckStretchSetup neck_setup_from_json(const Json& j) {
    NeckStretchSetup setup{Rat::parse(j.at("epsilon").get<std::string>()),
                           Ellipsoid::parse(j.at("scaled_target").get<std::string>()),
                           {},
                           j.at("cz_equal").get<bool>()};
    for (const Json& row : j.at("cz_table")) {
        setup.cz_table.push_back(CzScaleCheck{row.at("axis").get<int>(),
                                              row.at("cz_target").get<std::int64_t>(),
                                              row.at("cz_scaled").get<std::int64_t>()});
    }
    return setup;
}

std::string spectrum_to_tsv(const std::vector<SpectrumEntry>& entries, bool decimal_hint) {
    std::string out;
    if (decimal_hint) out += "# last column: decimal approximation, non-authoritative\n";
    for (const SpectrumEntry& e : entries) {
        out += e.action.to_string();
        out += '\t';
        out += std::to_string(e.orbit.axis);
        out += '\t';
        out += std::to_string(e.orbit.multiplicity);
        if (decimal_hint) {
            out += '\t';
            out += e.action.decimal_approx();
        }
        out += '\n';
    }
    return out;
}

std::string nk_to_tsv(const std::vector<Rat>& values, bool decimal_hint) {
    std::string out;
    if (decimal_hint) out += "# last column: decimal approximation, non-authoritative\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += std::to_string(k);
        out += '\t';
        out += values[k].to_string();
        if (decimal_hint) {
            out += '\t';
            out += values[k].decimal_approx();
        }
        out += '\n';
    }
    return out;
}

std::string staircase_to_tsv(const std::vector<StaircaseRow>& rows, bool decimal_hint) {
    std::string out = decimal_hint
                          ? "a\tc0_lower\targmax_k\tc0_lower_approx (non-authoritative)\n"
                          : "a\tc0_lower\targmax_k\n";
    for (const StaircaseRow& row : rows) {
        out += row.a.to_string();
        out += '\t';
        out += row.c0_lower.to_string();
        out += '\t';
        out += std::to_string(row.argmax_k);
        if (decimal_hint) {
            out += '\t';
            out += row.c0_lower.decimal_approx();
        }
        out += '\n';
    }
    return out;
}

}  // namespace ellip::io
