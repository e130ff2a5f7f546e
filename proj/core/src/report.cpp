#include "mixedtoric/report.hpp"

namespace mixedtoric {

namespace {

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json ray_json(const Ray& r) { return Json::array({r.x, r.y}); }

Json weight_json(const WeightVector& w) {
    Json j = Json::array();
    for (long e : w.entries) j.push_back(e);
    return j;
}

Json exps_json(const ExponentPair& e) {
    return Json{{"nu", e.nu}, {"mu", e.mu}};
}

Json fan_json(const Fan2& fan) {
    Json j = Json::array();
    for (const auto& r : fan.rays) j.push_back(ray_json(r));
    return j;
}

Json certificate_json(const HomogeneityCertificate& cert) {
    Json j;
    if (cert.radial)
        j["radial"] = {{"weight", weight_json(cert.radial->weight)},
                       {"degree", cert.radial->degree}};
    else
        j["radial"] = nullptr;
    if (cert.polar)
        j["polar"] = {{"weight", weight_json(cert.polar->weight)},
                      {"degree", cert.polar->degree}};
    else
        j["polar"] = nullptr;
    j["strongly_mixed"] = cert.strongly_mixed;
    j["polar_positive"] = cert.polar_positive;
    return j;
}

}  // namespace

Json analyze_report(const MixedPolynomial& f, const Fan2& fan) {
    Json j;
    j["polynomial"] = to_string(f);
    NewtonPolyhedron np = newton_polyhedron(f);

    Json support = Json::array();
    for (const auto& s : np.support) {
        Json witnesses = Json::array();
        for (const auto& w : s.witnesses) witnesses.push_back(exps_json(w));
        support.push_back({{"point", s.point}, {"witnesses", witnesses}});
    }
    j["newton"] = {{"support", support},
                   {"hull_vertices", np.hull_vertices},
                   {"compact_edges", Json::array()}};
    for (const auto& e : np.compact_edges)
        j["newton"]["compact_edges"].push_back(
            {{"from", e.from}, {"to", e.to}, {"normal", weight_json(e.normal)}});

    Json dual = Json::array();
    for (const auto& r : dual_diagram(np)) dual.push_back(weight_json(r));
    j["dual_diagram"] = dual;
    j["fan"] = fan_json(fan);
    j["fan_regular_simplicial"] = fan.regular_simplicial();
    j["fan_admissible"] = is_admissible(fan, np);
    j["fan_convenient"] = is_convenient_subdivision(fan, f);

    ConvenienceReport conv = is_convenient(f);
    Json conv_json = Json::array();
    for (const auto& e : conv.entries)
        conv_json.push_back({{"subset", e.subset}, {"nonzero", e.nonzero}});
    j["convenience"] = {{"convenient", conv.convenient}, {"restrictions", conv_json}};

    auto weight = find_radial_weight(f);
    if (weight) {
        j["radial_weight"] = weight_json(*weight);
        j["certificate"] = certificate_json(classify(f, *weight));
        EulerReport euler = verify_euler(f, *weight);
        j["euler"] = {{"radial_ok", euler.radial_checked && euler.radial_ok},
                      {"polar_ok", euler.polar_checked && euler.polar_ok},
                      {"half_ok", euler.half_checked && euler.half_ok}};
    } else {
        j["radial_weight"] = nullptr;
    }

    Json faces = Json::array();
    for (const auto& r : dual_diagram(np)) {
        if (!r.strictly_positive()) continue;
        Face fc = face(f, r);
        faces.push_back({{"normal", weight_json(r)},
                         {"d", fc.d},
                         {"dim", fc.dim},
                         {"points", fc.points},
                         {"face_function", to_string(face_function(f, r))}});
    }
    j["faces"] = faces;
    return j;
}

Json resolution_to_json(const ResolutionReport& rep) {
    Json j;
    j["polynomial"] = to_string(rep.poly);
    j["fan"] = fan_json(rep.fan);

    Json charts = Json::array();
    for (const auto& cr : rep.charts) {
        Json c;
        c["cone"] = Json::array({ray_json(cr.chart.col1), ray_json(cr.chart.col2)});
        c["pullback"] = to_string(pullback(rep.poly, cr.chart), "u");
        c["exceptional"] = {{"nu", cr.transform.exceptional_nu},
                            {"mu", cr.transform.exceptional_mu}};
        c["reduced"] = to_string(cr.transform.reduced, "u");
        Json xs = Json::array();
        for (const auto& xi : cr.intersections) {
            Json x;
            x["ray"] = ray_json(xi.ray);
            x["axis"] = xi.axis;
            x["restriction"] = to_string(xi.restriction, "u");
            Json zeros = Json::array();
            for (const auto& z : xi.zeros)
                zeros.push_back({{"u", complex_json(z.u)}, {"abs_f", z.abs_f}});
            x["zeros"] = zeros;
            xs.push_back(std::move(x));
        }
        c["exceptional_intersections"] = xs;
        if (cr.origin_value) c["origin_value"] = complex_json(*cr.origin_value);
        c["assumption_star"] = cr.assumption_star;
        charts.push_back(std::move(c));
    }
    j["charts"] = charts;

    Json lams = Json::array();
    for (const auto& lv : rep.lambda_values) {
        Json l;
        Json rays = Json::array();
        for (const auto& r : lv.cone_rays) rays.push_back(ray_json(r));
        l["cone"] = rays;
        Json offs = Json::array();
        for (const auto& o : lv.offenders)
            offs.push_back({{"nu", o.exps.nu},
                            {"mu", o.exps.mu},
                            {"vertex", ray_json(o.vertex)},
                            {"excess", o.excess}});
        l["offenders"] = offs;
        if (lv.value) l["value"] = *lv.value;
        else l["value"] = nullptr;
        lams.push_back(std::move(l));
    }
    j["lambda"] = lams;
    j["l_sigma_empty"] = rep.l_sigma_empty;

    Json notes = Json::array();
    for (const auto& n : rep.notes) notes.push_back(n);
    for (const auto& chk : rep.l_sigma_checks) {
        for (const auto& n : chk.notes) notes.push_back(n);
        if (!chk.stratum_empty) notes.push_back("nonempty stratum found");
    }
    j["notes"] = notes;
    return j;
}

Json certify_report(const MixedPolynomial& f, const SearchConfig& cfg) {
    Json j;
    j["polynomial"] = to_string(f);
    NewtonPolyhedron np = newton_polyhedron(f);
    auto certs = certify_faces(f, np, cfg);

    bool all_strong = true, all_newton = true;
    Json faces = Json::array();
    for (const auto& c : certs) {
        faces.push_back({{"normal", weight_json(c.face.normal)},
                         {"dim", c.face.dim},
                         {"face_function", to_string(c.face_poly)},
                         {"status", to_string(c.status)},
                         {"symbolic", c.symbolic},
                         {"evidence", c.evidence}});
        if (c.status != FaceStatus::strongly_nondegenerate) all_strong = false;
        if (c.status != FaceStatus::strongly_nondegenerate &&
            c.status != FaceStatus::newton_nondegenerate)
            all_newton = false;
    }
    j["faces"] = faces;
    j["newton_nondegenerate"] = all_newton;
    j["strongly_newton_nondegenerate"] = all_strong;

    SearchReport sr = search_critical(f, cfg);
    Json cands = Json::array();
    for (const auto& c : sr.candidates) {
        Json coords = Json::array();
        for (const auto& z : c.point.coords) coords.push_back(complex_json(z));
        cands.push_back({{"point", coords}, {"residual", c.residual}, {"abs_f", c.f_abs}});
    }
    j["search"] = {{"starts", sr.starts},
                   {"normalized", sr.normalized},
                   {"best_residual", sr.best_residual},
                   {"candidates", cands}};
    j["config"] = {{"seed", cfg.seed},
                   {"starts", cfg.starts},
                   {"tolerance", cfg.tolerance},
                   {"box", cfg.box}};
    return j;
}

Json sweep_to_json(const SweepReport& rep) {
    Json j;
    Json entries = Json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"case", e.case_id},
                           {"k", e.k},
                           {"best_residual", e.best_residual},
                           {"candidates", e.candidates}});
    j["entries"] = entries;
    j["note"] = rep.note;
    return j;
}

Json family_table_json(const std::vector<FamilyRow>& rows) {
    Json j = Json::array();
    for (const auto& r : rows)
        j.push_back({{"a", r.params.a},
                     {"b", r.params.b},
                     {"c", r.params.c},
                     {"d", r.params.d},
                     {"e", r.params.e},
                     {"f", r.params.f},
                     {"polar_degree", r.polar_degree},
                     {"holomorphic", r.holomorphic}});
    return j;
}

}  // namespace mixedtoric
