#pragma once

#include <string>

#include <json.hpp>

#include "ramseyforge/axiom_check.hpp"
#include "ramseyforge/forcing.hpp"
#include "ramseyforge/kernels.hpp"
#include "ramseyforge/lazy_tree.hpp"

namespace rf {

using Json = nlohmann::ordered_json;

/// Nodes in certificates: Ellentuck nodes are sorted element arrays, Milliken
/// nodes arrays of sorted element arrays.
Json node_to_json(const Space& space, const Approx& s);

Json check_report_to_json(const CheckReport& report);

Json validation_to_json(const Space& space, const ValidationReport& report);

/// Wraps a command result in the versioned certificate envelope.
Json certificate(const std::string& kind, Json params, Json result);

/// Canonical byte form: two-space indent, sorted-by-construction keys, one
/// trailing newline. Every emitter goes through here so replays are
/// byte-identical.
std::string dump_certificate(const Json& doc);

}  // namespace rf
