#pragma once

// Machine-readable analysis reports: one flat document per constructed code
// holding the measured quantities, the closed-form predictions where a
// formula applies, and an agreement flag per prediction. Serializes to JSON
// (round-trippable), CSV sections, and aligned text tables. Big counts are
// emitted as decimal strings.

#include <chrono>
#include <sstream>

#include <json.hpp>

#include <glab/lrc.hpp>

namespace glab {

using Json = nlohmann::ordered_json;

struct Agreement {
    enum class Kind { Match, Mismatch, NotApplicable } kind = Kind::NotApplicable;
    std::string details;

    bool operator==(const Agreement& o) const {
        return kind == o.kind && details == o.details;
    }
};

inline std::string to_string(Agreement::Kind k) {
    switch (k) {
        case Agreement::Kind::Match: return "match";
        case Agreement::Kind::Mismatch: return "mismatch";
        default: return "not_applicable";
    }
}

inline Agreement::Kind agreement_kind_from(const std::string& s) {
    if (s == "match") return Agreement::Kind::Match;
    if (s == "mismatch") return Agreement::Kind::Mismatch;
    return Agreement::Kind::NotApplicable;
}

struct WeightReport {
    WeightDistribution measured;
    std::optional<WeightDistribution> predicted;
    Agreement agreement;

    bool operator==(const WeightReport& o) const {
        return measured == o.measured && predicted == o.predicted && agreement == o.agreement;
    }
};

struct GhwEntry {
    int r = 0;
    std::optional<long long> measured;
    std::optional<long long> predicted;
    Agreement agreement;

    bool operator==(const GhwEntry& o) const {
        return r == o.r && measured == o.measured && predicted == o.predicted &&
               agreement == o.agreement;
    }
};

struct SswdEntry {
    int r = 0;
    std::optional<SSWDTable> measured;
    std::optional<SSWDTable> predicted;
    Agreement agreement;

    bool operator==(const SswdEntry& o) const {
        return r == o.r && measured == o.measured && predicted == o.predicted &&
               agreement == o.agreement;
    }
};

struct LocalityReport {
    int locality = 0;
    bool all_verified = false;
    long long coordinates = 0;
    std::vector<RepairEntry> sample;  // first few entries as witnesses

    bool equal_entries(const LocalityReport& o) const {
        if (sample.size() != o.sample.size()) return false;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            if (sample[i].coord != o.sample[i].coord || sample[i].helpers != o.sample[i].helpers ||
                sample[i].coeffs != o.sample[i].coeffs) {
                return false;
            }
        }
        return true;
    }
    bool operator==(const LocalityReport& o) const {
        return locality == o.locality && all_verified == o.all_verified &&
               coordinates == o.coordinates && equal_entries(o);
    }
};

struct ConstructionEcho {
    std::string family;  // "1", "1-pencil", "2"
    std::string layout;
    std::vector<int> u;  // family 1: {u}; family 2: u_1..u_h
    int u0 = 0;          // family 2 only
    int h = 0;
    std::vector<std::vector<std::vector<int>>> subspace_bases;

    bool operator==(const ConstructionEcho& o) const {
        return family == o.family && layout == o.layout && u == o.u && u0 == o.u0 && h == o.h &&
               subspace_bases == o.subspace_bases;
    }
};

struct AnalysisReport {
    int q = 0;
    int k = 0;
    long long n = 0;
    std::optional<long long> d;
    ConstructionEcho construction;
    std::optional<WeightReport> weights;
    std::vector<GhwEntry> ghw;
    std::vector<SswdEntry> sswd;
    std::optional<OptimalityCertificate> optimality;
    std::optional<LocalityReport> lrc;
    std::optional<CMReport> cm;
    double elapsed_seconds = 0.0;  // timing metadata, excluded from equality

    bool any_mismatch() const {
        auto bad = [](const Agreement& a) { return a.kind == Agreement::Kind::Mismatch; };
        if (weights && bad(weights->agreement)) return true;
        for (const auto& e : ghw) {
            if (bad(e.agreement)) return true;
        }
        for (const auto& e : sswd) {
            if (bad(e.agreement)) return true;
        }
        return false;
    }

    bool operator==(const AnalysisReport& o) const;
};

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {

inline Json counts_to_json(const std::map<long long, BigInt>& counts) {
    Json arr = Json::array();
    for (const auto& [w, m] : counts) arr.push_back(Json::array({w, m.str()}));
    return arr;
}

inline std::map<long long, BigInt> counts_from_json(const Json& arr) {
    std::map<long long, BigInt> counts;
    for (const auto& pair : arr) {
        counts[pair.at(0).get<long long>()] = BigInt(pair.at(1).get<std::string>());
    }
    return counts;
}

inline Json agreement_to_json(const Agreement& a) {
    Json j{{"verdict", to_string(a.kind)}};
    if (!a.details.empty()) j["details"] = a.details;
    return j;
}

inline Agreement agreement_from_json(const Json& j) {
    Agreement a;
    a.kind = agreement_kind_from(j.at("verdict").get<std::string>());
    if (j.contains("details")) a.details = j.at("details").get<std::string>();
    return a;
}

inline Json repair_entry_to_json(const RepairEntry& e) {
    Json coeffs = Json::array();
    for (Felem c : e.coeffs) coeffs.push_back(static_cast<int>(c));
    return Json{{"coord", e.coord}, {"helpers", e.helpers}, {"coeffs", coeffs}};
}

inline RepairEntry repair_entry_from_json(const Json& j) {
    RepairEntry e;
    e.coord = j.at("coord").get<int>();
    e.helpers = j.at("helpers").get<std::vector<int>>();
    for (const auto& c : j.at("coeffs")) e.coeffs.push_back(static_cast<Felem>(c.get<int>()));
    return e;
}

}  // namespace detail

inline std::string to_string(OptimalityCertificate::Verdict v) {
    switch (v) {
        case OptimalityCertificate::Verdict::GriesmerOptimal: return "griesmer_optimal";
        case OptimalityCertificate::Verdict::DistanceOptimal: return "distance_optimal";
        default: return "not_certified";
    }
}

inline std::string to_string(CMReport::Verdict v) {
    switch (v) {
        case CMReport::Verdict::MeetsCM: return "meets_cm_bound";
        case CMReport::Verdict::DefectAtMost: return "defect_at_most";
        default: return "unknown";
    }
}

inline Json to_json(const OptimalityCertificate& c) {
    Json j{{"q", c.q},
           {"n", c.n},
           {"k", c.k},
           {"d", c.d},
           {"griesmer", c.griesmer},
           {"defect", c.defect},
           {"delta1", c.delta1},
           {"verdict", to_string(c.verdict)},
           {"reason", c.reason}};
    if (c.h_expansion) {
        j["h_digits"] = c.h_expansion->digits;
        j["h_least_nonzero"] = c.h_expansion->least_nonzero_index;
    }
    return j;
}

inline OptimalityCertificate certificate_from_json(const Json& j) {
    OptimalityCertificate c;
    c.q = j.at("q").get<int>();
    c.n = j.at("n").get<long long>();
    c.k = j.at("k").get<int>();
    c.d = j.at("d").get<long long>();
    c.griesmer = j.at("griesmer").get<long long>();
    c.defect = j.at("defect").get<long long>();
    c.delta1 = j.at("delta1").get<long long>();
    const std::string v = j.at("verdict").get<std::string>();
    c.verdict = v == "griesmer_optimal" ? OptimalityCertificate::Verdict::GriesmerOptimal
                : v == "distance_optimal" ? OptimalityCertificate::Verdict::DistanceOptimal
                                          : OptimalityCertificate::Verdict::NotCertified;
    c.reason = j.at("reason").get<std::string>();
    if (j.contains("h_digits")) {
        QAdicExpansion e;
        e.digits = j.at("h_digits").get<std::vector<int>>();
        e.least_nonzero_index = j.at("h_least_nonzero").get<int>();
        c.h_expansion = e;
    }
    return c;
}

inline Json to_json(const CMReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back(Json::array({row.t, row.kopt, row.value}));
    return Json{{"q", r.q},
                {"n", r.n},
                {"k", r.k},
                {"d", r.d},
                {"locality", r.r},
                {"rows", rows},
                {"bound_upper", r.bound_upper},
                {"defect_upper", r.defect_upper},
                {"verdict", to_string(r.verdict)}};
}

inline CMReport cm_from_json(const Json& j) {
    CMReport r;
    r.q = j.at("q").get<int>();
    r.n = j.at("n").get<long long>();
    r.k = j.at("k").get<int>();
    r.d = j.at("d").get<long long>();
    r.r = j.at("locality").get<int>();
    for (const auto& row : j.at("rows")) {
        r.rows.push_back({row.at(0).get<long long>(), row.at(1).get<int>(),
                          row.at(2).get<long long>()});
    }
    r.bound_upper = j.at("bound_upper").get<long long>();
    r.defect_upper = j.at("defect_upper").get<long long>();
    const std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "meets_cm_bound" ? CMReport::Verdict::MeetsCM
                : v == "defect_at_most" ? CMReport::Verdict::DefectAtMost
                                        : CMReport::Verdict::Unknown;
    return r;
}

inline Json to_json(const AnalysisReport& rep) {
    Json j;
    j["q"] = rep.q;
    j["k"] = rep.k;
    j["n"] = rep.n;
    if (rep.d) j["d"] = *rep.d;
    Json cons;
    cons["family"] = rep.construction.family;
    cons["layout"] = rep.construction.layout;
    cons["h"] = rep.construction.h;
    cons["u"] = rep.construction.u;
    if (rep.construction.family == "2") cons["u0"] = rep.construction.u0;
    cons["subspaces"] = rep.construction.subspace_bases;
    j["construction"] = cons;
    if (rep.weights) {
        Json w;
        w["measured"] = detail::counts_to_json(rep.weights->measured.counts);
        if (rep.weights->predicted) {
            w["predicted"] = detail::counts_to_json(rep.weights->predicted->counts);
        }
        w["agreement"] = detail::agreement_to_json(rep.weights->agreement);
        j["weight_distribution"] = w;
    }
    if (!rep.ghw.empty()) {
        Json arr = Json::array();
        for (const auto& e : rep.ghw) {
            Json g{{"r", e.r}};
            if (e.measured) g["measured"] = *e.measured;
            if (e.predicted) g["predicted"] = *e.predicted;
            g["agreement"] = detail::agreement_to_json(e.agreement);
            arr.push_back(g);
        }
        j["ghw"] = arr;
    }
    if (!rep.sswd.empty()) {
        Json arr = Json::array();
        for (const auto& e : rep.sswd) {
            Json t{{"r", e.r}};
            if (e.measured) t["measured"] = detail::counts_to_json(e.measured->counts);
            if (e.predicted) t["predicted"] = detail::counts_to_json(e.predicted->counts);
            t["agreement"] = detail::agreement_to_json(e.agreement);
            arr.push_back(t);
        }
        j["sswd"] = arr;
    }
    if (rep.optimality) j["optimality"] = to_json(*rep.optimality);
    if (rep.lrc) {
        Json l;
        l["locality"] = rep.lrc->locality;
        l["all_verified"] = rep.lrc->all_verified;
        l["coordinates"] = rep.lrc->coordinates;
        Json sample = Json::array();
        for (const auto& e : rep.lrc->sample) sample.push_back(detail::repair_entry_to_json(e));
        l["sample"] = sample;
        j["lrc"] = l;
    }
    if (rep.cm) j["cm"] = to_json(*rep.cm);
    j["timing"] = Json{{"seconds", rep.elapsed_seconds}};
    return j;
}

inline AnalysisReport report_from_json(const Json& j) {
    AnalysisReport rep;
    rep.q = j.at("q").get<int>();
    rep.k = j.at("k").get<int>();
    rep.n = j.at("n").get<long long>();
    if (j.contains("d")) rep.d = j.at("d").get<long long>();
    const Json& cons = j.at("construction");
    rep.construction.family = cons.at("family").get<std::string>();
    rep.construction.layout = cons.at("layout").get<std::string>();
    rep.construction.h = cons.at("h").get<int>();
    rep.construction.u = cons.at("u").get<std::vector<int>>();
    if (cons.contains("u0")) rep.construction.u0 = cons.at("u0").get<int>();
    rep.construction.subspace_bases =
        cons.at("subspaces").get<std::vector<std::vector<std::vector<int>>>>();
    if (j.contains("weight_distribution")) {
        const Json& w = j.at("weight_distribution");
        WeightReport wr;
        wr.measured.counts = detail::counts_from_json(w.at("measured"));
        if (w.contains("predicted")) {
            WeightDistribution p;
            p.counts = detail::counts_from_json(w.at("predicted"));
            wr.predicted = std::move(p);
        }
        wr.agreement = detail::agreement_from_json(w.at("agreement"));
        rep.weights = std::move(wr);
    }
    if (j.contains("ghw")) {
        for (const auto& g : j.at("ghw")) {
            GhwEntry e;
            e.r = g.at("r").get<int>();
            if (g.contains("measured")) e.measured = g.at("measured").get<long long>();
            if (g.contains("predicted")) e.predicted = g.at("predicted").get<long long>();
            e.agreement = detail::agreement_from_json(g.at("agreement"));
            rep.ghw.push_back(std::move(e));
        }
    }
    if (j.contains("sswd")) {
        for (const auto& t : j.at("sswd")) {
            SswdEntry e;
            e.r = t.at("r").get<int>();
            if (t.contains("measured")) {
                SSWDTable tab;
                tab.r = e.r;
                tab.counts = detail::counts_from_json(t.at("measured"));
                e.measured = std::move(tab);
            }
            if (t.contains("predicted")) {
                SSWDTable tab;
                tab.r = e.r;
                tab.counts = detail::counts_from_json(t.at("predicted"));
                e.predicted = std::move(tab);
            }
            e.agreement = detail::agreement_from_json(t.at("agreement"));
            rep.sswd.push_back(std::move(e));
        }
    }
    if (j.contains("optimality")) rep.optimality = certificate_from_json(j.at("optimality"));
    if (j.contains("lrc")) {
        const Json& l = j.at("lrc");
        LocalityReport lr;
        lr.locality = l.at("locality").get<int>();
        lr.all_verified = l.at("all_verified").get<bool>();
        lr.coordinates = l.at("coordinates").get<long long>();
        for (const auto& e : l.at("sample")) lr.sample.push_back(detail::repair_entry_from_json(e));
        rep.lrc = std::move(lr);
    }
    if (j.contains("cm")) rep.cm = cm_from_json(j.at("cm"));
    if (j.contains("timing")) rep.elapsed_seconds = j.at("timing").at("seconds").get<double>();
    return rep;
}

inline bool AnalysisReport::operator==(const AnalysisReport& o) const {
    auto cert_eq = [](const std::optional<OptimalityCertificate>& a,
                      const std::optional<OptimalityCertificate>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        return a->q == b->q && a->n == b->n && a->k == b->k && a->d == b->d &&
               a->griesmer == b->griesmer && a->defect == b->defect && a->delta1 == b->delta1 &&
               a->h_expansion == b->h_expansion && a->verdict == b->verdict &&
               a->reason == b->reason;
    };
    auto cm_eq = [](const std::optional<CMReport>& a, const std::optional<CMReport>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        if (!(a->q == b->q && a->n == b->n && a->k == b->k && a->d == b->d && a->r == b->r &&
              a->bound_upper == b->bound_upper && a->defect_upper == b->defect_upper &&
              a->verdict == b->verdict && a->rows.size() == b->rows.size())) {
            return false;
        }
        for (std::size_t i = 0; i < a->rows.size(); ++i) {
            if (a->rows[i].t != b->rows[i].t || a->rows[i].kopt != b->rows[i].kopt ||
                a->rows[i].value != b->rows[i].value) {
                return false;
            }
        }
        return true;
    };
    return q == o.q && k == o.k && n == o.n && d == o.d && construction == o.construction &&
           weights == o.weights && ghw == o.ghw && sswd == o.sswd &&
           cert_eq(optimality, o.optimality) && lrc == o.lrc && cm_eq(cm, o.cm);
}

// ---------------------------------------------------------------------------
// Analysis driver
// ---------------------------------------------------------------------------

struct AnalysisRequest {
    bool weights = false;
    bool ghw = false;
    bool sswd = false;
    bool optimality = false;
    bool lrc = false;
    bool cm = false;
    std::optional<std::pair<int, int>> ghw_range;   // inclusive; default: all feasible r
    std::optional<std::pair<int, int>> sswd_range;  // inclusive; default: all feasible r
    Caps caps;
};

namespace detail {

inline std::vector<std::vector<int>> basis_as_ints(const Subspace& s) {
    std::vector<std::vector<int>> rows;
    for (const Vec& r : s.basis) rows.emplace_back(r.begin(), r.end());
    return rows;
}

template <typename Params>
struct PredictionAdapter;

template <>
struct PredictionAdapter<Family1Params> {
    static std::optional<WeightDistribution> weights(const Family1Params& p) {
        try {
            return predicted_weight_distribution(p);
        } catch (const HypothesisNotMet&) {
            return std::nullopt;
        }
    }
    static std::optional<long long> ghw(const Family1Params& p, int r) {
        try {
            return predicted_generalized_weight(p, r);
        } catch (const HypothesisNotMet&) {
            return std::nullopt;
        }
    }
    static std::optional<SSWDTable> sswd(const Family1Params&, int) { return std::nullopt; }
    static OptimalityCertificate certify(const Family1Params& p) { return certify_family1(p); }
    static ConstructionEcho echo(const Family1Params& p) {
        ConstructionEcho e;
        e.family = (p.layout == Family1Layout::PencilPairs) ? "1-pencil" : "1";
        e.layout = p.layout == Family1Layout::BlockDisjoint ? "block-disjoint"
                   : p.layout == Family1Layout::PencilPairs ? "pencil-pairs"
                                                            : "user-supplied";
        e.u = {p.u};
        e.h = p.h;
        return e;
    }
};

template <>
struct PredictionAdapter<Family2Params> {
    static std::optional<WeightDistribution> weights(const Family2Params& p) {
        try {
            return predicted_weight_distribution(p);
        } catch (const HypothesisNotMet&) {
            return std::nullopt;
        }
    }
    static std::optional<long long> ghw(const Family2Params& p, int r) {
        try {
            return predicted_generalized_weight(p, r);
        } catch (const HypothesisNotMet&) {
            return std::nullopt;
        }
    }
    static std::optional<SSWDTable> sswd(const Family2Params& p, int r) {
        try {
            return predicted_support_weight_table(p, r);
        } catch (const HypothesisNotMet&) {
            return std::nullopt;
        }
    }
    static OptimalityCertificate certify(const Family2Params& p) { return certify_family2(p); }
    static ConstructionEcho echo(const Family2Params& p) {
        ConstructionEcho e;
        e.family = "2";
        e.layout = p.layout == Family2Layout::CommonBlock ? "common-block" : "user-supplied";
        e.u = p.u;
        e.u0 = p.u0;
        e.h = static_cast<int>(p.u.size());
        return e;
    }
};

}  // namespace detail

template <typename Params>
AnalysisReport analyze(const BuiltCode<Params>& built, const AnalysisRequest& req) {
    using Adapter = detail::PredictionAdapter<Params>;
    const auto t0 = std::chrono::steady_clock::now();
    const LinearCode& code = built.code;
    AnalysisReport rep;
    rep.q = code.field().order();
    rep.k = code.dim();
    rep.n = code.length();
    rep.construction = Adapter::echo(built.params);
    for (const Subspace& s : built.subspaces) {
        rep.construction.subspace_bases.push_back(detail::basis_as_ints(s));
    }

    if (req.weights || req.cm) {
        WeightReport w;
        w.measured = code.weight_distribution(req.caps);
        rep.d = w.measured.min_nonzero_weight();
        w.predicted = Adapter::weights(built.params);
        if (!w.predicted) {
            w.agreement = {Agreement::Kind::NotApplicable, "no closed form for these parameters"};
        } else if (*w.predicted == w.measured) {
            w.agreement = {Agreement::Kind::Match, ""};
        } else {
            w.agreement = {Agreement::Kind::Mismatch,
                           "closed-form table differs from enumeration"};
        }
        if (req.weights) rep.weights = std::move(w);
    } else if (built.asserted_distance) {
        rep.d = built.asserted_distance;
    }

    auto feasible = [&](int r) {
        return gaussian_binomial(rep.k, r, rep.q) <= BigInt(req.caps.max_subspaces);
    };

    if (req.ghw) {
        const auto [lo, hi] = req.ghw_range.value_or(std::make_pair(1, rep.k));
        for (int r = lo; r <= hi && r <= rep.k; ++r) {
            GhwEntry e;
            e.r = r;
            e.predicted = Adapter::ghw(built.params, r);
            if (req.ghw_range && !feasible(r)) {
                // an explicitly requested r must not be skipped silently
                throw CapExceeded("generalized-weight enumeration at r = " + std::to_string(r) +
                                  " exceeds the subspace cap");
            }
            if (feasible(r)) {
                e.measured = code.generalized_weight(r, req.caps);
            }
            if (!e.measured || !e.predicted) {
                e.agreement = {Agreement::Kind::NotApplicable,
                               !e.measured ? "enumeration exceeds the cap" : "no closed form"};
            } else if (*e.measured == *e.predicted) {
                e.agreement = {Agreement::Kind::Match, ""};
            } else {
                e.agreement = {Agreement::Kind::Mismatch,
                               "predicted " + std::to_string(*e.predicted) + ", measured " +
                                   std::to_string(*e.measured)};
            }
            rep.ghw.push_back(std::move(e));
        }
    }

    if (req.sswd) {
        const auto [lo, hi] = req.sswd_range.value_or(std::make_pair(1, rep.k - 1));
        for (int r = lo; r <= hi && r <= rep.k; ++r) {
            SswdEntry e;
            e.r = r;
            e.predicted = Adapter::sswd(built.params, r);
            if (req.sswd_range && !feasible(r)) {
                throw CapExceeded("support-weight enumeration at r = " + std::to_string(r) +
                                  " exceeds the subspace cap");
            }
            if (feasible(r)) e.measured = code.support_weight_table(r, req.caps);
            if (!e.measured || !e.predicted) {
                e.agreement = {Agreement::Kind::NotApplicable,
                               !e.measured ? "enumeration exceeds the cap" : "no closed form"};
            } else if (*e.measured == *e.predicted) {
                e.agreement = {Agreement::Kind::Match, ""};
            } else {
                e.agreement = {Agreement::Kind::Mismatch,
                               "closed-form table differs from enumeration"};
            }
            rep.sswd.push_back(std::move(e));
        }
    }

    if (req.optimality) rep.optimality = Adapter::certify(built.params);

    int measured_locality = 2;
    if (req.lrc) {
        const RepairPlan plan = locality(code, req.caps);
        LocalityReport lr;
        lr.locality = plan.locality;
        lr.coordinates = static_cast<long long>(plan.entries.size());
        lr.all_verified = true;
        for (const auto& e : plan.entries) lr.all_verified = lr.all_verified && verify_repair(code, e);
        const std::size_t sample = std::min<std::size_t>(4, plan.entries.size());
        lr.sample.assign(plan.entries.begin(),
                         plan.entries.begin() + static_cast<std::ptrdiff_t>(sample));
        measured_locality = plan.locality;
        rep.lrc = std::move(lr);
    }

    if (req.cm) {
        rep.cm = cm_report(rep.q, rep.n, rep.k, *rep.d, measured_locality);
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// CSV / text rendering
// ---------------------------------------------------------------------------

inline std::string to_csv(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "section,parameters\nq,k,n,d\n"
        << rep.q << ',' << rep.k << ',' << rep.n << ',' << (rep.d ? std::to_string(*rep.d) : "")
        << "\n";
    if (rep.weights) {
        out << "\nsection,weight_distribution\nweight,measured,predicted,agreement\n";
        for (const auto& [w, m] : rep.weights->measured.counts) {
            out << w << ',' << m.str() << ',';
            if (rep.weights->predicted && rep.weights->predicted->counts.count(w)) {
                out << rep.weights->predicted->counts.at(w).str();
            }
            out << ',' << to_string(rep.weights->agreement.kind) << "\n";
        }
    }
    if (!rep.ghw.empty()) {
        out << "\nsection,ghw\nr,measured,predicted,agreement\n";
        for (const auto& e : rep.ghw) {
            out << e.r << ',' << (e.measured ? std::to_string(*e.measured) : "") << ','
                << (e.predicted ? std::to_string(*e.predicted) : "") << ','
                << to_string(e.agreement.kind) << "\n";
        }
    }
    if (!rep.sswd.empty()) {
        out << "\nsection,sswd\nr,weight,measured,predicted,agreement\n";
        for (const auto& e : rep.sswd) {
            const auto& table = e.measured ? e.measured : e.predicted;
            if (!table) continue;
            for (const auto& [w, m] : table->counts) {
                out << e.r << ',' << w << ',' << (e.measured ? e.measured->counts.at(w).str() : "")
                    << ',';
                if (e.predicted && e.predicted->counts.count(w)) {
                    out << e.predicted->counts.at(w).str();
                }
                out << ',' << to_string(e.agreement.kind) << "\n";
            }
        }
    }
    if (rep.optimality) {
        const auto& c = *rep.optimality;
        out << "\nsection,optimality\nn,k,d,griesmer,defect,delta1,verdict\n"
            << c.n << ',' << c.k << ',' << c.d << ',' << c.griesmer << ',' << c.defect << ','
            << c.delta1 << ',' << to_string(c.verdict) << "\n";
    }
    if (rep.lrc) {
        out << "\nsection,lrc\nlocality,all_verified,coordinates\n"
            << rep.lrc->locality << ',' << (rep.lrc->all_verified ? "true" : "false") << ','
            << rep.lrc->coordinates << "\n";
    }
    if (rep.cm) {
        out << "\nsection,cm\nt,kopt_upper,value\n";
        for (const auto& row : rep.cm->rows) {
            out << row.t << ',' << row.kopt << ',' << row.value << "\n";
        }
        out << "bound_upper,defect_upper,verdict\n"
            << rep.cm->bound_upper << ',' << rep.cm->defect_upper << ','
            << to_string(rep.cm->verdict) << "\n";
    }
    return out.str();
}

inline std::string to_text(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "[" << rep.n << "," << rep.k;
    if (rep.d) out << "," << *rep.d;
    out << "]_" << rep.q << "  (family " << rep.construction.family << ", "
        << rep.construction.layout << ")\n";
    if (rep.weights) {
        out << "\nweight distribution";
        if (rep.weights->predicted) {
            out << "  [closed form: " << to_string(rep.weights->agreement.kind) << "]";
        }
        out << "\n  weight  multiplicity\n";
        for (const auto& [w, m] : rep.weights->measured.counts) {
            out << "  " << w;
            for (std::size_t s = std::to_string(w).size(); s < 6; ++s) out << ' ';
            out << "  " << m.str() << "\n";
        }
    }
    if (!rep.ghw.empty()) {
        out << "\ngeneralized Hamming weights\n  r  measured  predicted  agreement\n";
        for (const auto& e : rep.ghw) {
            out << "  " << e.r << "  " << (e.measured ? std::to_string(*e.measured) : "-") << "  "
                << (e.predicted ? std::to_string(*e.predicted) : "-") << "  "
                << to_string(e.agreement.kind) << "\n";
        }
    }
    if (!rep.sswd.empty()) {
        for (const auto& e : rep.sswd) {
            out << "\nsupport weights of " << e.r << "-dimensional subcodes ["
                << to_string(e.agreement.kind) << "]\n  weight  count\n";
            const auto& table = e.measured ? e.measured : e.predicted;
            if (table) {
                for (const auto& [w, m] : table->counts) {
                    out << "  " << w;
                    for (std::size_t s = std::to_string(w).size(); s < 6; ++s) out << ' ';
                    out << "  " << m.str() << "\n";
                }
            }
        }
    }
    if (rep.optimality) {
        const auto& c = *rep.optimality;
        out << "\noptimality certificate\n"
            << "  griesmer sum  " << c.griesmer << "\n  defect        " << c.defect
            << "\n  delta_1       " << c.delta1 << "\n  verdict       " << to_string(c.verdict)
            << "\n  reason        " << c.reason << "\n";
    }
    if (rep.lrc) {
        out << "\nlocality\n  r = " << rep.lrc->locality << "  ("
            << (rep.lrc->all_verified ? "all repair sets verified" : "verification failed")
            << ")\n";
    }
    if (rep.cm) {
        out << "\nCM bound (locality " << rep.cm->r << ")\n  t  kopt_upper  t*r+kopt\n";
        for (const auto& row : rep.cm->rows) {
            out << "  " << row.t << "  " << row.kopt << "  " << row.value << "\n";
        }
        out << "  bound_upper " << rep.cm->bound_upper << ", defect_upper "
            << rep.cm->defect_upper << "  -> " << to_string(rep.cm->verdict) << "\n";
    }
    return out.str();
}

}  // namespace glab
