#include "tropmirror/io.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace tropmirror {

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorKind::ParseError, what);
}

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(std::string("missing field '") + key + "'");
    return *it;
}

Rational rat(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (!j.is_string()) parse_fail(std::string(what) + ": expected a rational string \"p/q\"");
    return parse_rational(j.get<std::string>());
}

ExponentVector ivec(const Json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + ": expected an integer array");
    ExponentVector v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) parse_fail(std::string(what) + ": expected integers");
        v.push_back(x.get<long long>());
    }
    return v;
}

WeightedPointSet parse_points(const Json& j, int n) {
    WeightedPointSet w;
    w.n = n;
    const Json& pts = need(j, "points");
    if (!pts.is_array() || pts.empty()) parse_fail("'points' must be a nonempty array");
    for (const auto& p : pts) {
        WeightedPoint wp;
        wp.alpha = ivec(need(p, "alpha"), "alpha");
        wp.rho = rat(need(p, "rho"), "rho");
        if (p.contains("c")) {
            if (!p["c"].is_string()) parse_fail("'c' must be a string");
            wp.coeff = p["c"].get<std::string>();
        }
        w.points.push_back(std::move(wp));
    }
    w.validate();
    return w;
}

AmbientToricData parse_ambient(const Json& j, const WeightedPointSet& w) {
    AmbientToricData amb;
    amb.epsilon = rat(need(j, "epsilon"), "epsilon");
    if (j.contains("rays")) {
        for (const auto& r : j["rays"]) {
            amb.rays.push_back(ivec(need(r, "sigma"), "sigma"));
            amb.lambda.push_back(rat(need(r, "lambda"), "lambda"));
            amb.varpi.push_back(rat(need(r, "varpi"), "varpi"));
        }
    }
    amb.validate(w);
    return amb;
}

CIDatum parse_ci(const Json& j, int n) {
    CIDatum ci;
    ci.n = n;
    const Json& hs = need(j, "hypersurfaces");
    if (!hs.is_array() || hs.empty()) parse_fail("'hypersurfaces' must be a nonempty array");
    for (const auto& h : hs) {
        ci.hypersurfaces.push_back(parse_points(h, n));
        ci.epsilons.push_back(rat(need(h, "epsilon"), "epsilon"));
    }
    if (j.contains("ambient") && j["ambient"].contains("rays")) {
        for (const auto& r : j["ambient"]["rays"]) {
            ci.rays.push_back(ivec(need(r, "sigma"), "sigma"));
            ci.varpi.push_back(rat(need(r, "varpi"), "varpi"));
            const Json& lam = need(r, "lambda");
            if (!lam.is_array()) parse_fail("'lambda' must be an array (one per hypersurface)");
            std::vector<Rational> ls;
            for (const auto& x : lam) ls.push_back(rat(x, "lambda"));
            ci.lambda.push_back(std::move(ls));
        }
    }
    ci.validate();
    return ci;
}

ModificationSpec parse_modspec(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "all") return ModificationSpec::all();
        if (s == "none") return ModificationSpec::empty();
        parse_fail("'delete' must be \"all\", \"none\" or an array of directions");
    }
    if (!j.is_array()) parse_fail("'delete' must be \"all\", \"none\" or an array of directions");
    std::vector<ExponentVector> dirs;
    for (const auto& d : j) dirs.push_back(ivec(d, "delete direction"));
    return ModificationSpec::dirs(std::move(dirs));
}

}  // namespace

JobSpec parse_input(const std::string& bytes) {
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) parse_fail("top-level JSON must be an object");
    JobSpec job;
    std::string mode = need(j, "mode").get<std::string>();
    if (mode == "hypersurface") job.mode = JobSpec::Mode::Hypersurface;
    else if (mode == "ci") job.mode = JobSpec::Mode::Ci;
    else if (mode == "converse") job.mode = JobSpec::Mode::Converse;
    else if (mode == "critlocus") job.mode = JobSpec::Mode::Critlocus;
    else if (mode == "wallcheck") job.mode = JobSpec::Mode::Wallcheck;
    else parse_fail("unknown mode '" + mode + "'");

    if (!need(j, "n").is_number_integer()) parse_fail("'n' must be an integer");
    int n = j["n"].get<int>();
    if (n <= 0) throw Error(ErrorKind::ValidationError, "n must be >= 1");

    if (job.mode == JobSpec::Mode::Ci) {
        job.ci = parse_ci(j, n);
    } else {
        job.points = parse_points(j, n);
        if (j.contains("ambient")) job.ambient = parse_ambient(j["ambient"], job.points);
    }

    if (j.contains("depth")) {
        std::string d = j["depth"].get<std::string>();
        if (d == "subdivision") job.depth = JobSpec::Depth::Subdivision;
        else if (d == "mirror") job.depth = JobSpec::Depth::Mirror;
        else if (d == "potential") job.depth = JobSpec::Depth::Potential;
        else parse_fail("unknown depth '" + d + "'");
    }
    if (j.contains("options")) {
        const Json& o = j["options"];
        if (o.contains("cutoff")) job.cutoff = rat(o["cutoff"], "cutoff");
        if (o.contains("svg")) job.svg = o["svg"].get<bool>();
        if (o.contains("delete")) job.modification = parse_modspec(o["delete"]);
        if (o.contains("report_path")) job.report_path = o["report_path"].get<std::string>();
    }
    return job;
}

bool JobSpec::operator==(const JobSpec& o) const {
    return serialize_job(*this) == serialize_job(o);
}

namespace {

Json points_to_json(const WeightedPointSet& w) {
    Json pts = Json::array();
    for (const auto& p : w.points) {
        Json jp;
        jp["alpha"] = p.alpha;
        jp["rho"] = rational_str(p.rho);
        jp["c"] = p.coeff;
        pts.push_back(jp);
    }
    return pts;
}

Json modspec_to_json(const ModificationSpec& m) {
    switch (m.kind) {
        case ModificationSpec::Kind::All: return "all";
        case ModificationSpec::Kind::Empty: return "none";
        case ModificationSpec::Kind::Directions: {
            Json a = Json::array();
            for (const auto& d : m.directions) a.push_back(d);
            return a;
        }
    }
    return "all";
}

}  // namespace

Json serialize_job(const JobSpec& job) {
    Json j;
    switch (job.mode) {
        case JobSpec::Mode::Hypersurface: j["mode"] = "hypersurface"; break;
        case JobSpec::Mode::Ci: j["mode"] = "ci"; break;
        case JobSpec::Mode::Converse: j["mode"] = "converse"; break;
        case JobSpec::Mode::Critlocus: j["mode"] = "critlocus"; break;
        case JobSpec::Mode::Wallcheck: j["mode"] = "wallcheck"; break;
    }
    if (job.mode == JobSpec::Mode::Ci) {
        j["n"] = job.ci.n;
        Json hs = Json::array();
        for (int i = 0; i < job.ci.d(); ++i) {
            Json h;
            h["points"] = points_to_json(job.ci.hypersurfaces[i]);
            h["epsilon"] = rational_str(job.ci.epsilons[i]);
            hs.push_back(h);
        }
        j["hypersurfaces"] = hs;
        if (!job.ci.rays.empty()) {
            Json rays = Json::array();
            for (int r = 0; r < job.ci.r(); ++r) {
                Json jr;
                jr["sigma"] = job.ci.rays[r];
                jr["varpi"] = rational_str(job.ci.varpi[r]);
                Json lam = Json::array();
                for (const auto& l : job.ci.lambda[r]) lam.push_back(rational_str(l));
                jr["lambda"] = lam;
                rays.push_back(jr);
            }
            j["ambient"]["rays"] = rays;
        }
    } else {
        j["n"] = job.points.n;
        j["points"] = points_to_json(job.points);
        if (job.ambient) {
            Json a;
            a["epsilon"] = rational_str(job.ambient->epsilon);
            Json rays = Json::array();
            for (int r = 0; r < job.ambient->r(); ++r) {
                Json jr;
                jr["sigma"] = job.ambient->rays[r];
                jr["lambda"] = rational_str(job.ambient->lambda[r]);
                jr["varpi"] = rational_str(job.ambient->varpi[r]);
                rays.push_back(jr);
            }
            if (!rays.empty()) a["rays"] = rays;
            j["ambient"] = a;
        }
    }
    switch (job.depth) {
        case JobSpec::Depth::Subdivision: j["depth"] = "subdivision"; break;
        case JobSpec::Depth::Mirror: j["depth"] = "mirror"; break;
        case JobSpec::Depth::Potential: j["depth"] = "potential"; break;
    }
    Json o = Json::object();
    if (job.cutoff) o["cutoff"] = rational_str(*job.cutoff);
    if (job.svg) o["svg"] = true;
    o["delete"] = modspec_to_json(job.modification);
    if (!job.report_path.empty()) o["report_path"] = job.report_path;
    j["options"] = o;
    return j;
}

AmbientToricData default_ambient() {
    AmbientToricData amb;
    amb.epsilon = 1;
    return amb;
}

// ---------------------------------------------------------------------------
// Report serialization

namespace {

Json qvec_to_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_str(x));
    return a;
}

Json alpha_of(const WeightedPointSet& w, int idx) { return Json(w.alpha(idx)); }

}  // namespace

Json series_to_json(const NovikovSeries& s) {
    Json j;
    Json terms = Json::array();
    for (const auto& t : s.terms()) {
        Json jt;
        jt["coeff"] = rational_str(t.coeff);
        jt["exp"] = rational_str(t.exp);
        terms.push_back(jt);
    }
    j["terms"] = terms;
    j["cutoff"] = s.cutoff() ? Json(rational_str(*s.cutoff())) : Json("inf");
    return j;
}

Json expr_to_json(const ChartExpression& e) {
    Json j;
    j["nvars"] = e.nvars();
    j["nv0"] = e.nv0();
    Json terms = Json::array();
    for (const auto& [k, s] : e.terms()) {
        Json jt;
        jt["laurent"] = k.laurent;
        jt["v0"] = k.v0;
        jt["series"] = series_to_json(s);
        terms.push_back(jt);
    }
    j["terms"] = terms;
    if (!e.chart().empty()) {
        Json c = Json::array();
        for (const auto& a : e.chart()) c.push_back(a);
        j["chart"] = c;
    }
    return j;
}

namespace {

Json subdivision_to_json(const WeightedPointSet& w, const RegularSubdivision& s,
                         const MaximalityCertificate& cert) {
    Json j;
    j["degenerate"] = s.degenerate;
    j["hull_dim"] = s.hull_dim;
    j["maximal"] = cert.maximal;
    if (!cert.maximal) j["maximality_note"] = cert.reason;
    Json ar = Json::array();
    for (int i : s.a_red) ar.push_back(alpha_of(w, i));
    j["a_red"] = ar;
    Json cells = Json::array();
    for (const auto& c : s.cells) {
        Json jc;
        Json pts = Json::array(), verts = Json::array();
        for (int i : c.points) pts.push_back(alpha_of(w, i));
        for (int i : c.vertices) verts.push_back(alpha_of(w, i));
        jc["points"] = pts;
        jc["vertices"] = verts;
        jc["slope"] = qvec_to_json(c.slope);
        jc["offset"] = rational_str(c.offset);
        cells.push_back(jc);
    }
    j["cells"] = cells;
    return j;
}

Json tropical_to_json(const WeightedPointSet& w, const RegularSubdivision& s,
                      const TropicalComplex& tc,
                      const std::optional<TropicalCurveGraph>& curve) {
    Json j;
    Json comps = Json::array();
    for (const auto& c : tc.components) {
        Json jc;
        jc["label"] = alpha_of(w, c.label);
        jc["bounded"] = c.bounded;
        jc["interior_point"] = qvec_to_json(c.interior_point);
        Json ineqs = Json::array();
        for (const auto& h : c.inequalities) {
            Json ji;
            ji["normal"] = qvec_to_json(h.normal);
            ji["offset"] = rational_str(h.offset);
            ineqs.push_back(ji);
        }
        jc["inequalities"] = ineqs;
        comps.push_back(jc);
    }
    j["components"] = comps;
    Json cells = Json::array();
    for (int k = 0; k < static_cast<int>(tc.cells_by_dim.size()); ++k) {
        for (const auto& c : tc.cells_by_dim[k]) {
            Json jc;
            jc["dim"] = c.dim;
            Json dual = Json::array();
            for (int i : c.dual.vertices) dual.push_back(alpha_of(w, i));
            jc["dual_cell"] = dual;
            jc["bounded"] = c.bounded;
            jc["witness"] = qvec_to_json(c.witness);
            cells.push_back(jc);
        }
    }
    j["cells"] = cells;
    (void)s;
    if (curve) {
        Json jg;
        Json vs = Json::array();
        for (const auto& v : curve->vertices) vs.push_back(qvec_to_json(v.point));
        jg["vertices"] = vs;
        Json es = Json::array();
        for (const auto& e : curve->edges) {
            Json je;
            je["v0"] = e.v0;
            if (e.bounded) je["v1"] = e.v1;
            else je["ray_dir"] = e.ray_dir;
            je["bounded"] = e.bounded;
            je["multiplicity"] = e.multiplicity;
            es.push_back(je);
        }
        jg["edges"] = es;
        jg["genus"] = curve->genus;
        jg["components"] = curve->components;
        j["curve"] = jg;
    }
    return j;
}

Json mirror_to_json(const WeightedPointSet& w, const MirrorData& md) {
    Json j;
    j["smooth"] = md.smooth;
    Json facets = Json::array();
    for (const auto& f : md.facets) {
        Json jf;
        jf["alpha"] = f.alpha;
        jf["rho"] = rational_str(f.rho);
        jf["ray"] = f.ray;
        jf["compact"] = f.compact;
        facets.push_back(jf);
    }
    j["facets"] = facets;
    Json cones = Json::array();
    for (const auto& c : md.cones) {
        Json jc;
        Json pts = Json::array();
        for (int i : c.cell_points) pts.push_back(alpha_of(w, i));
        jc["cell"] = pts;
        Json rays = Json::array();
        for (const auto& r : c.rays) rays.push_back(r);
        jc["rays"] = rays;
        jc["index"] = c.index.str();
        jc["smooth"] = c.smooth;
        cones.push_back(jc);
    }
    j["cones"] = cones;
    Json strata = Json::array();
    for (const auto& st : md.strata) {
        Json js;
        js["a"] = alpha_of(w, st.a);
        js["b"] = alpha_of(w, st.b);
        js["bounded"] = st.bounded;
        js["multiplicity"] = st.multiplicity;
        strata.push_back(js);
    }
    j["strata"] = strata;
    if (md.orthant_map) {
        Json jm;
        Json rows = Json::array();
        for (const auto& r : md.orthant_map->first) rows.push_back(qvec_to_json(r));
        jm["matrix"] = rows;
        jm["offset"] = qvec_to_json(md.orthant_map->second);
        j["orthant_map"] = jm;
    } else {
        j["orthant_map"] = nullptr;
    }
    return j;
}

Json term_to_json(const WeightedPointSet& w, const RegularSubdivision& s,
                  const SuperpotentialTerm& t) {
    Json j;
    j["name"] = t.name;
    j["weight"] = t.weight;
    Json c;
    c["coeff"] = rational_str(t.coefficient.coeff);
    c["exp"] = rational_str(t.coefficient.exp);
    j["coefficient"] = c;
    j["chart"] = t.chart >= 0 ? alpha_of(w, t.chart) : Json(nullptr);
    j["expression"] = expr_to_json(t.expr);
    Json orders = Json::array();
    for (int label : s.a_red) orders.push_back(vanishing_order(t, w.alpha(label)));
    j["orders"] = orders;
    return j;
}

Json potential_to_json(const WeightedPointSet& w, const RegularSubdivision& s,
                       const AmbientToricData& amb,
                       const std::vector<SuperpotentialTerm>& W0,
                       const std::vector<SuperpotentialTerm>& W0H) {
    Json j;
    j["epsilon"] = rational_str(amb.epsilon);
    Json jw0 = Json::array(), jw0h = Json::array();
    for (const auto& t : W0) jw0.push_back(term_to_json(w, s, t));
    for (const auto& t : W0H) jw0h.push_back(term_to_json(w, s, t));
    j["W0"] = jw0;
    j["W0H"] = jw0h;
    Json divisors = Json::array();
    for (int label : s.a_red) divisors.push_back(alpha_of(w, label));
    j["divisor_order"] = divisors;
    return j;
}

Json atlas_to_json(const WeightedPointSet& w, const ChartAtlas& atlas) {
    Json j;
    Json charts = Json::array();
    for (int c : atlas.charts) charts.push_back(alpha_of(w, c));
    j["charts"] = charts;
    Json gl = Json::array();
    for (const auto& g : atlas.gluings) {
        Json jg;
        jg["from"] = alpha_of(w, g.from);
        jg["to"] = alpha_of(w, g.to);
        jg["delta"] = g.delta;
        gl.push_back(jg);
    }
    j["gluings"] = gl;
    return j;
}

Json singular_fiber_to_json(const WeightedPointSet& w, const SingularFiberInfo& info) {
    Json j;
    Json full = Json::array();
    for (int i : info.full_components) full.push_back(alpha_of(w, i));
    j["full_components"] = full;
    Json entries = Json::array();
    for (const auto& e : info.entries) {
        Json je;
        je["alpha"] = alpha_of(w, e.label);
        je["vanishing_terms"] = e.vanishing_terms;
        je["full_component"] = e.full_component;
        entries.push_back(je);
    }
    j["entries"] = entries;
    return j;
}

Json critlocus_to_json(const ReducedGraph& rg, const ModificationSpec& spec) {
    Json j;
    j["delete"] = modspec_to_json(spec);
    j["deleted_rays"] = rg.deleted_rays;
    Json vs = Json::array();
    std::map<int, int> remap;
    for (size_t v = 0; v < rg.vertices.size(); ++v) {
        if (!rg.vertices[v].alive) continue;
        remap[static_cast<int>(v)] = static_cast<int>(vs.size());
        vs.push_back(qvec_to_json(rg.vertices[v].point));
    }
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : rg.edges) {
        if (!e.alive) continue;
        Json je;
        je["v0"] = remap.at(e.v0);
        if (e.bounded) je["v1"] = remap.at(e.v1);
        else je["ray_dir"] = e.ray_dir;
        je["bounded"] = e.bounded;
        je["merged_segments"] = e.merged_segments;
        es.push_back(je);
    }
    j["edges"] = es;
    Json cycles = Json::array();
    for (const auto& comp : rg.pure_cycle_components) {
        Json jc = Json::array();
        for (int v : comp) jc.push_back(remap.at(v));
        cycles.push_back(jc);
    }
    j["pure_cycle_components"] = cycles;
    j["betti"] = rg.first_betti();
    if (rg.live_ray_count() == 0) {
        try {
            CountCheckReport rep = count_check(rg);
            Json jr;
            jr["vertices"] = rep.vertices;
            jr["edges"] = rep.edges;
            jr["genus"] = rep.genus;
            jr["pure_cycle"] = rep.pure_cycle;
            jr["passed"] = rep.passed;
            jr["detail"] = rep.detail;
            j["count_check"] = jr;
        } catch (const Error& e) {
            j["count_check"] = Json{{"error", e.what()}};
        }
    } else {
        j["count_check"] = nullptr;
    }
    return j;
}

Json converse_to_json(const ConverseChartPair& cp) {
    Json j;
    j["ftilde"] = expr_to_json(cp.ftilde);
    j["uprime_potential"] = expr_to_json(cp.uprime_potential);
    j["udoubleprime_potential"] = expr_to_json(cp.udoubleprime_potential);
    j["gluing"] = expr_to_json(cp.gluing);
    j["verified"] = cp.verified;
    return j;
}

Json wallcheck_to_json(const WeightedPointSet& w, const RegularSubdivision& s,
                       const TropicalComplex& tc, const AmbientToricData& amb) {
    ChartAtlas atlas = build_atlas(w, s, tc);
    // Cocycle suite on a deterministic pseudo-random monomial basis.
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<int> me(-5, 5), pe(0, 3), co(1, 5);
    int checked = 0;
    bool cocycle_ok = true;
    for (const auto& tri : atlas.triangles) {
        for (int iter = 0; iter < 20; ++iter) {
            ExponentVector m(w.n);
            for (int c = 0; c < w.n; ++c) m[c] = me(rng);
            ChartExpression x = ChartExpression::monomial1(
                w.n, NovikovSeries::monomial(co(rng), Rational(pe(rng))), m, pe(rng));
            ChartExpression y = glue(glue(glue(x, w.alpha(tri[0]), w.alpha(tri[1])),
                                          w.alpha(tri[1]), w.alpha(tri[2])),
                                     w.alpha(tri[2]), w.alpha(tri[0]));
            cocycle_ok = cocycle_ok && x == y;
            ++checked;
        }
    }
    bool chart_ok = true;
    int chart_checked = 0;
    for (int i = 0; i < amb.r(); ++i)
        for (int a : s.a_red)
            for (int b : s.a_red) {
                ChartExpression ea = express_w_in_chart(w, s, amb, i, w.alpha(a));
                ChartExpression eb = express_w_in_chart(w, s, amb, i, w.alpha(b));
                chart_ok = chart_ok && glue(ea, w.alpha(a), w.alpha(b)) == eb;
                ++chart_checked;
            }
    Json j;
    j["cocycle"] = cocycle_ok ? "PASS" : "FAIL";
    j["cocycle_monomials"] = checked;
    j["triangles"] = atlas.triangles.size();
    j["chart_invariance"] = chart_ok ? "PASS" : "FAIL";
    j["chart_invariance_cases"] = chart_checked;
    return j;
}

Json ci_to_json(const CIDatum& ci, const CIMirror& mir) {
    Json j;
    j["d"] = mir.d;
    j["smooth"] = mir.smooth;
    Json tuples = Json::array();
    for (const auto& t : mir.tuples.tuples) {
        Json jt;
        Json labels = Json::array();
        for (int i = 0; i < mir.d; ++i) labels.push_back(ci.hypersurfaces[i].alpha(t.labels[i]));
        jt["labels"] = labels;
        jt["bounded"] = t.bounded;
        jt["interior_point"] = qvec_to_json(t.interior_point);
        tuples.push_back(jt);
    }
    j["tuples"] = tuples;
    Json facets = Json::array();
    for (const auto& f : mir.facets) {
        Json jf;
        jf["hypersurface"] = f.hypersurface + 1;
        jf["alpha"] = f.alpha;
        jf["rho"] = rational_str(f.rho);
        jf["ray"] = f.ray;
        jf["compact"] = f.compact;
        facets.push_back(jf);
    }
    j["facets"] = facets;
    Json cones = Json::array();
    for (const auto& c : mir.cones) {
        Json jc;
        jc["dual_point"] = qvec_to_json(c.dual_point);
        Json rays = Json::array();
        for (const auto& r : c.rays) rays.push_back(r);
        jc["rays"] = rays;
        jc["index"] = c.index.str();
        jc["smooth"] = c.smooth;
        cones.push_back(jc);
    }
    j["cones"] = cones;
    Json strata = Json::array();
    for (const auto& st : mir.strata) {
        Json js;
        js["a"] = st.a;
        js["b"] = st.b;
        js["bounded"] = st.bounded;
        strata.push_back(js);
    }
    j["strata"] = strata;
    auto terms = [&](const std::vector<CITerm>& ts) {
        Json arr = Json::array();
        for (const auto& t : ts) {
            Json jt;
            jt["name"] = t.name;
            jt["weight"] = t.weight;
            Json c;
            c["coeff"] = rational_str(t.coefficient.coeff);
            c["exp"] = rational_str(t.coefficient.exp);
            jt["coefficient"] = c;
            jt["expression"] = expr_to_json(t.expr);
            if (!t.chart_labels.empty()) {
                Json ch = Json::array();
                for (int i = 0; i < mir.d; ++i)
                    ch.push_back(ci.hypersurfaces[i].alpha(t.chart_labels[i]));
                jt["chart"] = ch;
                jt["chart_realized"] = t.chart_realized;
            }
            Json orders = Json::array();
            for (const auto& f : mir.facets) orders.push_back(ci_vanishing_order(t, f));
            jt["orders"] = orders;
            arr.push_back(jt);
        }
        return arr;
    };
    j["W0"] = terms(mir.W0);
    j["W0H"] = terms(mir.W0H);
    j["warnings"] = mir.warnings;
    return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// SVG

namespace {

double to_double(const Rational& q) {
    return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
}

}  // namespace

std::string render_svg(const WeightedPointSet& w, const RegularSubdivision& s,
                       const TropicalComplex& tc, const TropicalCurveGraph& g) {
    (void)s;
    // Viewport: bounded part plus unit ray stubs, padded.
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    };
    for (const auto& v : g.vertices) grow(to_double(v.point[0]), to_double(v.point[1]));
    struct Seg {
        double x0, y0, x1, y1;
        bool dashed;
    };
    std::vector<Seg> segs;
    for (const auto& e : g.edges) {
        double x0 = to_double(g.vertices[e.v0].point[0]);
        double y0 = to_double(g.vertices[e.v0].point[1]);
        if (e.bounded) {
            double x1 = to_double(g.vertices[e.v1].point[0]);
            double y1 = to_double(g.vertices[e.v1].point[1]);
            segs.push_back({x0, y0, x1, y1, false});
        } else {
            double dx = static_cast<double>(e.ray_dir[0]);
            double dy = static_cast<double>(e.ray_dir[1]);
            double len = std::sqrt(dx * dx + dy * dy);
            segs.push_back({x0, y0, x0 + dx / len, y0 + dy / len, true});
            grow(x0 + dx / len, y0 + dy / len);
        }
    }
    // Component labels near the tropical curve: clamp interior points to the box.
    struct Label {
        double x, y;
        std::string text;
    };
    std::vector<Label> labels;
    for (const auto& c : tc.components) {
        double x = to_double(c.interior_point[0]);
        double y = to_double(c.interior_point[1]);
        x = std::max(minx - 0.8, std::min(maxx + 0.8, x));
        y = std::max(miny - 0.8, std::min(maxy + 0.8, y));
        labels.push_back({x, y, vec_str(w.alpha(c.label))});
        grow(x, y);
    }
    double pad = 0.6;
    minx -= pad;
    miny -= pad;
    maxx += pad;
    maxy += pad;
    const double scale = 48.0;
    double width = (maxx - minx) * scale;
    double height = (maxy - miny) * scale;
    auto X = [&](double x) { return (x - minx) * scale; };
    auto Y = [&](double y) { return height - (y - miny) * scale; };  // y up

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& sgm : segs) {
        os << "<line x1=\"" << X(sgm.x0) << "\" y1=\"" << Y(sgm.y0) << "\" x2=\"" << X(sgm.x1)
           << "\" y2=\"" << Y(sgm.y1) << "\" stroke=\"black\" stroke-width=\"2\"";
        if (sgm.dashed) os << " stroke-dasharray=\"6 4\"";
        os << "/>\n";
    }
    for (const auto& v : g.vertices)
        os << "<circle cx=\"" << X(to_double(v.point[0])) << "\" cy=\""
           << Y(to_double(v.point[1])) << "\" r=\"3\" fill=\"black\"/>\n";
    for (const auto& l : labels)
        os << "<text x=\"" << X(l.x) << "\" y=\"" << Y(l.y)
           << "\" font-size=\"11\" font-family=\"monospace\" fill=\"#555\" text-anchor=\"middle\">"
           << l.text << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Pipeline

Json run_job(const JobSpec& job) {
    Json rep;
    if (job.mode == JobSpec::Mode::Ci) {
        rep["mode"] = "ci";
        rep["n"] = job.ci.n;
        CIMirror mir = build_ci_mirror(job.ci);
        rep["ci"] = ci_to_json(job.ci, mir);
        return rep;
    }

    const WeightedPointSet& w = job.points;
    AmbientToricData amb = job.ambient ? *job.ambient : default_ambient();
    RegularSubdivision s = lower_hull_subdivision(w);
    TropicalComplex tc = build_tropical_complex(w, s);
    MaximalityCertificate cert = is_maximal(w, s);
    std::optional<TropicalCurveGraph> curve;
    if (w.n == 2 && !s.degenerate) curve = curve_graph(w, s, tc);

    rep["n"] = w.n;
    switch (job.mode) {
        case JobSpec::Mode::Hypersurface: {
            rep["mode"] = "hypersurface";
            rep["subdivision"] = subdivision_to_json(w, s, cert);
            rep["tropical"] = tropical_to_json(w, s, tc, curve);
            if (job.depth != JobSpec::Depth::Subdivision) {
                MirrorData md = build_mirror(w, s, tc);
                rep["mirror"] = mirror_to_json(w, md);
            }
            if (job.depth == JobSpec::Depth::Potential) {
                auto W0 = build_W0(w, s, amb);
                auto W0H = build_W0H(w, s, amb);
                rep["potential"] = potential_to_json(w, s, amb, W0, W0H);
                rep["atlas"] = atlas_to_json(w, build_atlas(w, s, tc));
                rep["singular_fiber"] =
                    singular_fiber_to_json(w, singular_fiber_components(w, s, amb));
            }
            break;
        }
        case JobSpec::Mode::Critlocus: {
            rep["mode"] = "critlocus";
            rep["subdivision"] = subdivision_to_json(w, s, cert);
            if (!curve)
                throw Error(ErrorKind::WrongDimension,
                            "critlocus mode needs a 2-dimensional nondegenerate datum");
            rep["tropical"] = tropical_to_json(w, s, tc, curve);
            ReducedGraph rg = modify(*curve, job.modification);
            rep["critlocus"] = critlocus_to_json(rg, job.modification);
            break;
        }
        case JobSpec::Mode::Converse: {
            rep["mode"] = "converse";
            rep["subdivision"] = subdivision_to_json(w, s, cert);
            rep["converse"] = converse_to_json(build_converse(w, s));
            break;
        }
        case JobSpec::Mode::Wallcheck: {
            rep["mode"] = "wallcheck";
            rep["subdivision"] = subdivision_to_json(w, s, cert);
            rep["wallcheck"] = wallcheck_to_json(w, s, tc, amb);
            break;
        }
        case JobSpec::Mode::Ci:
            break;  // handled above
    }
    if (job.svg && curve) rep["svg_included"] = true;
    return rep;
}

std::string report_bytes(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace tropmirror
