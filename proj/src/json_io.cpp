#include "besselnorm/json_io.hpp"

#include <nlohmann/json.hpp>

namespace besselnorm {

using nlohmann::json;

namespace {

Matrix matrix_from_json(const json& j, const char* field) {
    if (!j.is_array() || j.empty())
        throw ParseError(std::string(field) + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array())
        throw ParseError(std::string(field) + ": rows must be arrays");
    const std::size_t cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError(std::string(field) + ": ragged rows at row " +
                             std::to_string(i));
        for (std::size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number())
                throw ParseError(std::string(field) + ": non-numeric entry at row " +
                                 std::to_string(i));
            m(i, k) = j[i][k].get<double>();
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(row);
    }
    return rows;
}

ColVec vector_from_json(const json& j, const char* field) {
    if (!j.is_array()) throw ParseError(std::string(field) + ": expected an array");
    ColVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw ParseError(std::string(field) + ": non-numeric entry");
        v[i] = j[i].get<double>();
    }
    return v;
}

json vector_to_json(const ColVec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

}  // namespace

SpaceDescriptor space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("dim"))
        throw ParseError("space: expected {kind, dim[, p]}");
    int dim = j.at("dim").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "c0") return SpaceDescriptor::c0(dim);
    if (kind != "lp") throw ParseError("space.kind: expected \"lp\" or \"c0\"");
    if (!j.contains("p")) throw ParseError("space: lp requires field p");
    const json& p = j.at("p");
    if (p.is_string()) {
        if (p.get<std::string>() != "inf")
            throw ParseError("space.p: expected a number or \"inf\"");
        return SpaceDescriptor::lp_inf(dim);
    }
    if (!p.is_number()) throw ParseError("space.p: expected a number or \"inf\"");
    return SpaceDescriptor::lp(p.get<double>(), dim);
}

json space_to_json(const SpaceDescriptor& s) {
    json j;
    j["dim"] = s.dim;
    if (s.kind == SpaceKind::C0) {
        j["kind"] = "c0";
    } else {
        j["kind"] = "lp";
        if (s.exponent.is_infinite())
            j["p"] = "inf";
        else
            j["p"] = s.exponent.value();
    }
    return j;
}

BiorthogonalSystem system_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("A") || !j.contains("B"))
        throw ParseError("system: expected {ambient, A, B}");
    return BiorthogonalSystem(space_from_json(j.at("ambient")),
                              matrix_from_json(j.at("A"), "A"),
                              matrix_from_json(j.at("B"), "B"));
}

json system_to_json(const BiorthogonalSystem& sys) {
    json j;
    j["ambient"] = space_to_json(sys.ambient);
    j["A"] = matrix_to_json(sys.A);
    j["B"] = matrix_to_json(sys.B);
    return j;
}

CoeffTensor coeff_tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("left") || !j.contains("right") || !j.contains("lam"))
        throw ParseError("tensor: expected {left, right, lam}");
    return CoeffTensor(matrix_from_json(j.at("lam"), "lam"),
                       space_from_json(j.at("left")), space_from_json(j.at("right")));
}

json coeff_tensor_to_json(const CoeffTensor& u) {
    json j;
    j["left"] = space_to_json(u.left);
    j["right"] = space_to_json(u.right);
    j["lam"] = matrix_to_json(u.lam);
    return j;
}

RankRep rank_rep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("left") || !j.contains("right") ||
        !j.contains("pairs"))
        throw ParseError("rank rep: expected {left, right, pairs}");
    SpaceDescriptor left = space_from_json(j.at("left"));
    SpaceDescriptor right = space_from_json(j.at("right"));
    if (!j.at("pairs").is_array()) throw ParseError("rank rep: pairs must be an array");
    std::vector<std::pair<Vector, Vector>> pairs;
    for (const auto& pj : j.at("pairs")) {
        if (!pj.is_object() || !pj.contains("x") || !pj.contains("y"))
            throw ParseError("rank rep: each pair needs x and y");
        pairs.emplace_back(Vector(vector_from_json(pj.at("x"), "x"), left),
                           Vector(vector_from_json(pj.at("y"), "y"), right));
    }
    return RankRep(std::move(pairs), left, right);
}

json rank_rep_to_json(const RankRep& rep) {
    json j;
    j["left"] = space_to_json(rep.left);
    j["right"] = space_to_json(rep.right);
    json pairs = json::array();
    for (const auto& [x, y] : rep.pairs) {
        json p;
        p["x"] = vector_to_json(x.coords);
        p["y"] = vector_to_json(y.coords);
        pairs.push_back(p);
    }
    j["pairs"] = pairs;
    return j;
}

json norm_result_to_json(const NormResult& r) {
    json j;
    j["value"] = r.value;
    if (r.is_exact())
        j["certificate"] = "exact";
    else
        j["certificate"] = json{{"bracket", json::array({r.lower, r.upper})}};
    j["witness_f"] = vector_to_json(r.witness_f);
    j["witness_g"] = vector_to_json(r.witness_g);
    j["method"] = r.method;
    j["iterations"] = r.iterations;
    return j;
}

std::variant<CoeffTensor, RankRep> tensor_input_from_json(const json& j) {
    if (j.is_object() && j.contains("lam")) return coeff_tensor_from_json(j);
    if (j.is_object() && j.contains("pairs")) return rank_rep_from_json(j);
    throw ParseError("input: expected a coefficient tensor (lam) or rank rep (pairs)");
}

}  // namespace besselnorm
