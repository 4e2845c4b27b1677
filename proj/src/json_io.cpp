#include "fermatst/json_io.hpp"

#include "fermatst/modarith.hpp"

namespace fermatst {

json to_json(const Character& c) {
    json j;
    j["m"] = c.m;
    j["entries"] = c.entries;
    return j;
}

json to_json(const GammaWord& w) {
    json j;
    j["m"] = w.m;
    j["indices"] = w.idx;
    return j;
}

json to_json(const ExponentVector& e) {
    json j;
    j["m"] = e.m;
    j["e"] = e.e;
    return j;
}

json to_json(const EquationLattice& L) {
    json j;
    j["m"] = L.m;
    j["rank"] = L.rank();
    json rows = json::array();
    for (size_t r = 0; r < L.basis.rows; ++r) {
        json row = json::array();
        for (size_t c = 0; c < L.basis.cols; ++c) row.push_back(L.basis.at(r, c).get_str());
        rows.push_back(row);
    }
    j["basis"] = rows;
    return j;
}

json to_json(const mpq_class& q) { return json::array({q.get_num().get_str(), q.get_den().get_str()}); }

json to_json(const CycloNumber& x) {
    json j;
    j["M"] = x.M;
    json coeffs = json::array();
    for (const auto& c : x.c) coeffs.push_back(to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

json to_json(const PadicInt& x) {
    json j;
    j["p"] = x.p;
    j["k"] = x.k;
    j["residue"] = x.r.get_str();
    return j;
}

json to_json(const PeriodValue& pv, size_t digits) {
    json j;
    j["beta"] = pv.beta.idx;
    j["m"] = pv.beta.m;
    j["norm"] = pv.norm == PeriodNorm::P ? "P" : "Phat";
    j["re"] = pv.value.re.str(digits);
    j["im"] = pv.value.im.str(digits);
    j["prec"] = (long)pv.prec;
    return j;
}

json to_json(const ActionBlock& blk) {
    json j;
    j["m"] = blk.orbit.m;
    j["u"] = blk.u;
    json orbit = json::array();
    for (const auto& w : blk.orbit.members) orbit.push_back(w.idx);
    j["orbit"] = orbit;
    json entries = json::array();
    for (size_t i = 0; i < blk.coeff.size(); ++i) {
        json e;
        e["from"] = blk.orbit.members[i].idx;
        e["to"] = blk.orbit.members[i].unit_multiple(inv_mod(blk.u, blk.orbit.m)).idx;
        e["coeff_phat"] = to_json(blk.coeff[i]);
        e["coeff_omega"] = to_json(blk.omega_coeff_of(blk.orbit.members[i]));
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

json to_json(const RhoMatrix& rho) {
    json j;
    j["m"] = rho.m;
    j["handle"] = rho.handle.str();
    j["u"] = rho.u;
    json blocks = json::array();
    for (const auto& b : rho.blocks) blocks.push_back(to_json(b));
    j["blocks"] = blocks;
    return j;
}

json to_json(const GKReport& rep) {
    json j;
    j["m"] = rep.m;
    j["alpha"] = rep.alpha.idx;
    j["p"] = rep.p;
    j["k"] = rep.k;
    j["prec"] = rep.prec;
    j["verdict"] = rep.verdict_str();
    if (rep.lhs_known) j["lhs"] = to_json(rep.lhs);
    j["rhs"] = to_json(rep.rhs);
    if (!rep.diagnostics.empty()) j["diagnostics"] = rep.diagnostics;
    return j;
}

json to_json(const IdentityComponent& ic) {
    json j;
    j["m"] = ic.m;
    j["rank"] = ic.lattice.rows;
    j["dimension"] = ic.dimension;
    json rows = json::array();
    for (size_t r = 0; r < ic.lattice.rows; ++r) {
        json row = json::array();
        for (size_t c = 0; c < ic.lattice.cols; ++c) row.push_back(ic.lattice.at(r, c).get_str());
        rows.push_back(row);
    }
    j["equations"] = rows;
    return j;
}

json to_json(const ComponentDescription& cd) {
    json j;
    j["index"] = cd.index;
    j["u"] = cd.u;
    j["order"] = cd.order;
    j["witness"] = cd.witness;
    json rep = json::array();
    for (const auto& t : cd.rep) rep.push_back(to_json(t));
    j["representative_diagonal"] = rep;
    return j;
}

json to_json(const STDescription& st) {
    json j;
    j["m"] = st.ctx.m;
    j["N"] = st.ctx.N;
    j["mt_lattice"] = to_json(st.ctx.mt);
    j["identity_component"] = to_json(st.ctx.ident);
    j["component_count"] = st.component_count();
    json comps = json::array();
    for (const auto& c : st.components) comps.push_back(to_json(c));
    j["components"] = comps;
    j["multiplication_table"] = st.mult_table;
    j["closed"] = st.closed;
    j["u_surjective"] = st.u_surjective;
    j["stable"] = st.stable;
    j["notes"] = st.notes;
    return j;
}

json to_json(const CurveCount& c) {
    json j;
    j["m"] = c.m;
    j["a"] = to_json(mpq_class(c.a));
    j["p"] = c.p;
    j["f"] = c.f;
    j["count"] = c.count;
    return j;
}

json to_json(const EigenvalueData& e) {
    json j;
    j["m"] = e.m;
    j["a"] = to_json(mpq_class(e.a));
    j["p"] = e.p;
    j["f"] = e.f;
    json eig = json::array();
    for (const auto& x : e.eig) eig.push_back(to_json(x));
    j["eigenvalues"] = eig;
    return j;
}

json to_json(const TwistReport& t) {
    json j;
    j["m"] = t.m;
    j["a"] = to_json(mpq_class(t.a));
    j["p_bound"] = t.p_bound;
    j["all_agree"] = t.all_agree;
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["p"] = r.p;
        row["f"] = r.f;
        row["outcomes_a"] = r.outcomes_a;
        row["outcomes_1"] = r.outcomes_1;
        row["agree"] = r.agree;
        rows.push_back(row);
    }
    j["per_prime"] = rows;
    return j;
}

}  // namespace fermatst
