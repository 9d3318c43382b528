#ifndef GCLAB_JSON_IO_HPP
#define GCLAB_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include "gclab/containment.hpp"
#include "gclab/recognizers.hpp"

namespace gclab {

/// Stable JSON shape: {"kind": ..., "vertex_map": [...]} for embedding kinds,
/// plus "routes": [{"edge": [u,v], "path": [...]}] for topological kinds and
/// "branch_sets": [[...]] for minors.  Field order never changes.
nlohmann::ordered_json witness_to_json(const Witness& w, const Graph& pattern);
Witness witness_from_json(const nlohmann::json& j);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace gclab

#endif
