#include "teichfuchs/jsonio.hpp"

namespace teichfuchs {

json to_json(const QuadNum& x) {
    return json{{"a", rat_to_string(x.a())}, {"b", rat_to_string(x.b())}, {"D", x.disc()}};
}

QuadNum quadnum_from_json(const json& j) {
    return QuadNum(rat_from_string(j.at("a").get<std::string>()),
                   rat_from_string(j.at("b").get<std::string>()), j.at("D").get<long>());
}

json to_json(const PadicQuad& x, const PrimeContext& ctx) {
    return json{{"p", ctx.p},
                {"n", ctx.n},
                {"k", ctx.k},
                {"c0", std::to_string(x.c0)},
                {"c1", std::to_string(x.c1)}};
}

json to_json(const PolyQ& p) {
    json arr = json::array();
    for (const auto& c : p.c) arr.push_back(to_json(c));
    return arr;
}

json to_json(const RationalFunction& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const Prototype& p) {
    return json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"e", p.e}, {"D", p.D},
                {"spin", spin(p)}, {"component", spin_component_label(p)}};
}

json to_json(const CuspNormalForm& nf) {
    return json{{"mu", to_json(nf.mu)},
                {"lambda_sq", to_json(nf.lambda_sq)},
                {"b_sq", to_json(nf.b_sq)},
                {"quintic", to_json(nf.quintic)}};
}

namespace {

json exponents_json(const std::pair<Rat, Rat>& e) {
    return json::array({rat_to_string(e.first), rat_to_string(e.second)});
}

}  // namespace

json to_json(const FuchsOp& L) {
    json sing = json::array();
    for (const auto& sp : L.singularities) {
        json s;
        if (auto* q = std::get_if<QuadNum>(&sp.loc))
            s["point"] = to_json(*q);
        else if (auto* ap = std::get_if<AlgebraicPoint>(&sp.loc))
            s["minpoly"] = to_json(ap->minpoly);
        else
            s["point"] = "infinity";
        s["exponents"] = exponents_json(sp.exponents);
        s["kind"] = sp.kind == SingKind::cusp      ? "cusp"
                    : sp.kind == SingKind::ks_zero ? "ks_zero"
                                                   : "infinity";
        sing.push_back(s);
    }
    return json{{"A", to_json(L.A)}, {"B", to_json(L.B)}, {"singularities", sing}};
}

json to_json(const ReductionReport& r) {
    const char* status = r.status == ReductionStatus::good             ? "good"
                         : r.status == ReductionStatus::bad_model      ? "bad_model"
                         : r.status == ReductionStatus::potentially_good ? "potentially_good"
                                                                        : "not_potentially_good";
    return json{{"p", r.p}, {"status", status}, {"evidence", r.evidence}};
}

json to_json(const ModPoly& f) {
    json arr = json::array();
    for (const auto& c : f.c) arr.push_back(to_json(c, f.ctx));
    return json{{"p", f.ctx.p}, {"n", f.ctx.n}, {"k", f.ctx.k}, {"coeffs", arr}};
}

json to_json(const SeriesPrefix<QuadNum>& s) {
    json arr = json::array();
    for (const auto& c : s.c) arr.push_back(to_json(c));
    return arr;
}

}  // namespace teichfuchs
