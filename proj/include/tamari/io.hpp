#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tamari/binary_tree.hpp"
#include "tamari/census.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/noncrossing.hpp"
#include "tamari/relation.hpp"

namespace tamari {

using Json = nlohmann::json;

// Text form: "L" for a leaf, "(left right)" for a node. Whitespace is free.
std::string format_tree(const BinaryTree& t);
BinaryTree parse_tree(std::string_view text);

// null for a leaf, [left, right] for a node. Parsing also accepts the text
// form as a JSON string.
Json tree_to_json(const BinaryTree& t);
BinaryTree tree_from_json(const Json& j);

// {"size": n, "inc": [[a, b], ...], "dec": [[b, a], ...]}, each pair read
// as "first ⊴ second". Output lists the Hasse covers split by direction;
// input may list any generating set.
Json poset_to_json(const IntervalPoset& p);
IntervalPoset poset_from_json(const Json& j);

// {"lower": tree, "upper": tree}.
Json interval_to_json(const TamariInterval& interval);
TamariInterval interval_from_json(const Json& j);

// {"n": n, "edges": [[a, b], ...]}.
Json nct_to_json(const NoncrossingTree& t);
NoncrossingTree nct_from_json(const Json& j);

// {"n": n, "blocks": [[...], ...]}.
Json ncp_to_json(const NoncrossingPartition& p);
NoncrossingPartition ncp_from_json(const Json& j);

// {"lower": partition, "upper": partition}, lower refining upper.
Json ncp_interval_to_json(const NoncrossingPartition& lower, const NoncrossingPartition& upper);
std::pair<NoncrossingPartition, NoncrossingPartition> ncp_interval_from_json(const Json& j);

// Parses text as JSON, raising ParseError instead of the library exception.
Json parse_json(std::string_view text);

// Hasse covers a ⊴ b with a < b (resp. a > b).
std::vector<Pair> increasing_covers(const IntervalPoset& p);
std::vector<Pair> decreasing_covers(const IntervalPoset& p);

// Elements on a line; increasing covers as red arcs below it, decreasing
// covers as blue arcs above it.
std::string arc_diagram_dot(const IntervalPoset& p);
// Hasse diagram, drawn bottom to top.
std::string hasse_dot(const IntervalPoset& p);

// Header "size,family,count,formula,match"; formula is blank when absent.
std::string census_csv(const std::vector<CensusRow>& rows);
Json census_json(const std::vector<CensusRow>& rows);

}  // namespace tamari
