#include "mopuc/measure_io.hpp"

#include <fstream>
#include <sstream>

namespace mopuc {

Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a non-empty array of rows");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j.at(0).size());
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
            throw ParseError("matrix: ragged rows");
        }
        for (Index c = 0; c < cols; ++c) {
            const Json& e = row.at(static_cast<std::size_t>(c));
            if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number()) {
                throw ParseError("matrix: entries must be [re, im] pairs");
            }
            m(i, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

namespace {

template <typename Measure, typename Atom>
Json measure_json(const char* kind, const Measure& mu, double (*pos)(const Atom&)) {
    Json j;
    j["kind"] = kind;
    j["p"] = mu.dim();
    Json atoms = Json::array();
    for (const Atom& a : mu.atoms()) {
        Json atom;
        atom["pos"] = pos(a);
        atom["weight"] = matrix_to_json(a.weight.mat());
        atoms.push_back(std::move(atom));
    }
    j["atoms"] = std::move(atoms);
    return j;
}

}  // namespace

Json measure_to_json(const CircleMeasure& mu) {
    return measure_json<CircleMeasure, CircleAtom>("circle", mu,
                                                   [](const CircleAtom& a) { return a.theta; });
}

Json measure_to_json(const IntervalMeasure& mu) {
    return measure_json<IntervalMeasure, IntervalAtom>("interval", mu,
                                                       [](const IntervalAtom& a) { return a.x; });
}

AnyMeasure measure_from_json(const Json& j, const Tolerances& tol) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const Index p = j.at("p").get<Index>();
        const Json& atoms = j.at("atoms");
        if (!atoms.is_array()) throw ParseError("measure: atoms must be an array");
        if (kind == "circle") {
            std::vector<CircleAtom> list;
            for (const Json& a : atoms) {
                list.push_back({a.at("pos").get<double>(),
                                HermitianMatrix(matrix_from_json(a.at("weight")), tol.hermitian)});
            }
            return CircleMeasure(p, std::move(list), tol);
        }
        if (kind == "interval") {
            std::vector<IntervalAtom> list;
            for (const Json& a : atoms) {
                list.push_back({a.at("pos").get<double>(),
                                HermitianMatrix(matrix_from_json(a.at("weight")), tol.hermitian)});
            }
            return IntervalMeasure(p, std::move(list), tol);
        }
        throw ParseError("measure: unknown kind '" + kind + "'");
    } catch (const Json::exception& e) {
        throw ParseError(std::string("measure: ") + e.what());
    }
}

Json moments_to_json(const MomentSequence& seq) {
    Json j;
    j["kind"] = "circle";
    j["p"] = seq.dim();
    j["order"] = seq.max_order();
    Json list = Json::array();
    for (const CMatrix& g : seq.gammas()) list.push_back(matrix_to_json(g));
    j["moments"] = std::move(list);
    return j;
}

Json moments_to_json(const IntervalMomentSequence& s) {
    Json j;
    j["kind"] = "interval";
    j["p"] = s.dim();
    j["order"] = s.max_order();
    Json list = Json::array();
    for (const CMatrix& m : s.moments()) list.push_back(matrix_to_json(m));
    j["moments"] = std::move(list);
    return j;
}

MomentSequence circle_moments_from_json(const Json& j, const Tolerances& tol) {
    try {
        if (j.at("kind").get<std::string>() != "circle") {
            throw ParseError("moments: expected kind 'circle'");
        }
        const Index p = j.at("p").get<Index>();
        std::vector<CMatrix> gammas;
        for (const Json& g : j.at("moments")) gammas.push_back(matrix_from_json(g));
        return MomentSequence(p, std::move(gammas), tol);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("moments: ") + e.what());
    }
}

Json canonical_to_json(const CanonicalSequence& cs) {
    Json j;
    j["kind"] = "circle";
    j["p"] = cs.p;
    Json list = Json::array();
    for (const CMatrix& a : cs.coeffs) list.push_back(matrix_to_json(a));
    j["A"] = std::move(list);
    if (cs.n_mu.has_value()) {
        j["n_mu"] = *cs.n_mu;
    } else {
        j["n_mu"] = "unbounded";
    }
    switch (cs.trigger) {
        case BoundaryTrigger::MomentsExhausted: j["trigger"] = "moments_exhausted"; break;
        case BoundaryTrigger::ToeplitzBoundary: j["trigger"] = "toeplitz_boundary"; break;
        case BoundaryTrigger::ContractionBoundary: j["trigger"] = "contraction_boundary"; break;
    }
    return j;
}

Json canonical_to_json(const IntervalCanonical& ic) {
    Json j;
    j["kind"] = "interval";
    Json u = Json::array();
    for (const CMatrix& m : ic.u) u.push_back(matrix_to_json(m));
    j["U"] = std::move(u);
    Json ub = Json::array();
    for (const CMatrix& m : ic.u_bar) ub.push_back(matrix_to_json(m));
    j["U_bar"] = std::move(ub);
    if (ic.n_mu.has_value()) {
        j["n_mu"] = *ic.n_mu;
    } else {
        j["n_mu"] = "unbounded";
    }
    j["u_asymmetry"] = ic.u_asymmetry;
    return j;
}

Json polynomial_to_json(const MatrixPolynomial& poly) {
    Json list = Json::array();
    for (const CMatrix& c : poly.coeffs()) list.push_back(matrix_to_json(c));
    return list;
}

Json geronimus_report_to_json(const GeronimusReport& report) {
    Json j;
    j["B_discrepancy"] = report.b_discrepancy;
    j["C_discrepancy"] = report.c_discrepancy;
    Json per = Json::array();
    for (const GeronimusReport::PerIndex& pi : report.per_index) {
        Json e;
        e["index"] = pi.index;
        e["B"] = pi.b;
        e["C"] = pi.c;
        per.push_back(std::move(e));
    }
    j["per_index"] = std::move(per);
    j["n_checked"] = report.n_checked;
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

}  // namespace mopuc
