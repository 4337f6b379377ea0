#pragma once

#include "besselnorm/frames.hpp"
#include "besselnorm/opnorm.hpp"
#include "besselnorm/tensor.hpp"

#include <nlohmann/json_fwd.hpp>

#include <variant>

namespace besselnorm {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// space: {"kind": "lp"|"c0", "p": number|"inf", "dim": n}
SpaceDescriptor space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const SpaceDescriptor& s);

// {"ambient": space, "A": [[...]], "B": [[...]]} with rows as JSON rows
BiorthogonalSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const BiorthogonalSystem& sys);

// {"left": space, "right": space, "lam": [[...]]}
CoeffTensor coeff_tensor_from_json(const nlohmann::json& j);
nlohmann::json coeff_tensor_to_json(const CoeffTensor& u);

// {"left": space, "right": space, "pairs": [{"x": [...], "y": [...]}]}
RankRep rank_rep_from_json(const nlohmann::json& j);
nlohmann::json rank_rep_to_json(const RankRep& rep);

// {"value": x, "certificate": "exact"|{"bracket": [lo, hi]}, ...}
nlohmann::json norm_result_to_json(const NormResult& r);

/// Dispatch on the presence of "lam" vs "pairs".
std::variant<CoeffTensor, RankRep> tensor_input_from_json(const nlohmann::json& j);

}  // namespace besselnorm
