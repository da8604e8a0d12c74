#include "tamari/io.hpp"

#include <cctype>
#include <sstream>

#include "tamari/classifiers.hpp"
#include "tamari/error.hpp"

namespace tamari {

namespace {

void format_node(const BinaryTree& t, int v, std::string& out) {
  if (v == 0) {
    out += 'L';
    return;
  }
  out += '(';
  format_node(t, t.left_child(v), out);
  out += ' ';
  format_node(t, t.right_child(v), out);
  out += ')';
}

Json node_to_json(const BinaryTree& t, int v) {
  if (v == 0) return nullptr;
  return Json::array({node_to_json(t, t.left_child(v)), node_to_json(t, t.right_child(v))});
}

BinaryTree nested_tree(const Json& j) {
  if (j.is_null()) return BinaryTree::leaf();
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("tree node must be null or a [left, right] array, got " + j.dump());
  }
  return BinaryTree::node(nested_tree(j[0]), nested_tree(j[1]));
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<Pair> pair_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of pairs");
  std::vector<Pair> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw ParseError(std::string(what) + " entries must be [x, y] pairs, got " + item.dump());
    }
    out.emplace_back(as_int(item[0], what), as_int(item[1], what));
  }
  return out;
}

Json pair_json(const std::vector<Pair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

void check_elements(const std::vector<Pair>& pairs, int n, const char* what) {
  for (const auto& [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParseError(std::string(what) + " pair [" + std::to_string(a) + ", " +
                       std::to_string(b) + "] outside 1.." + std::to_string(n));
    }
  }
}

}  // namespace

std::string format_tree(const BinaryTree& t) {
  std::string out;
  format_node(t, t.root(), out);
  return out;
}

BinaryTree parse_tree(std::string_view text) {
  // Nodes in creation order; -1 stands for a leaf.
  std::vector<std::pair<int, int>> nodes;
  std::vector<std::vector<int>> open;
  std::vector<int> done;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    auto where = [&] { return " at offset " + std::to_string(pos); };
    if (c == '(') {
      open.emplace_back();
      continue;
    }
    int finished = -1;
    if (c == ')') {
      if (open.empty()) throw ParseError("unbalanced ')'" + where());
      if (open.back().size() != 2) throw ParseError("a node needs exactly two children" + where());
      finished = static_cast<int>(nodes.size());
      nodes.emplace_back(open.back()[0], open.back()[1]);
      open.pop_back();
    } else if (c != 'L') {
      throw ParseError(std::string("unexpected character '") + c + "'" + where());
    }
    if (open.empty()) {
      done.push_back(finished);
    } else {
      if (open.back().size() == 2) throw ParseError("a node needs exactly two children" + where());
      open.back().push_back(finished);
    }
  }
  if (!open.empty()) throw ParseError("unterminated '('");
  if (done.size() != 1) {
    throw ParseError("expected exactly one tree, found " + std::to_string(done.size()));
  }

  // In-order labels, then child arrays by label.
  std::vector<int> label(nodes.size(), 0);
  int next = 0;
  std::vector<int> stack;
  for (int v = done.front(); v >= 0 || !stack.empty();) {
    for (; v >= 0; v = nodes[static_cast<std::size_t>(v)].first) stack.push_back(v);
    v = stack.back();
    stack.pop_back();
    label[static_cast<std::size_t>(v)] = ++next;
    v = nodes[static_cast<std::size_t>(v)].second;
  }
  std::vector<int> left(nodes.size() + 1, 0);
  std::vector<int> right(nodes.size() + 1, 0);
  auto lab = [&](int v) { return v < 0 ? 0 : label[static_cast<std::size_t>(v)]; };
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    left[static_cast<std::size_t>(label[v])] = lab(nodes[v].first);
    right[static_cast<std::size_t>(label[v])] = lab(nodes[v].second);
  }
  return BinaryTree::from_children(std::move(left), std::move(right), lab(done.front()));
}

Json tree_to_json(const BinaryTree& t) { return node_to_json(t, t.root()); }

BinaryTree tree_from_json(const Json& j) {
  if (j.is_string()) return parse_tree(j.get<std::string>());
  return nested_tree(j);
}

Json poset_to_json(const IntervalPoset& p) {
  return Json{{"size", p.size()},
              {"inc", pair_json(increasing_covers(p))},
              {"dec", pair_json(decreasing_covers(p))}};
}

IntervalPoset poset_from_json(const Json& j) {
  const int n = as_int(field(j, "size"), "size");
  if (n < 1 || n > kMaxRelationSize) {
    throw ParseError("size must be in 1.." + std::to_string(kMaxRelationSize));
  }
  const auto inc = j.contains("inc") ? pair_list(j["inc"], "inc") : std::vector<Pair>{};
  const auto dec = j.contains("dec") ? pair_list(j["dec"], "dec") : std::vector<Pair>{};
  check_elements(inc, n, "inc");
  check_elements(dec, n, "dec");
  return IntervalPoset::from_relations(n, inc, dec);
}

Json interval_to_json(const TamariInterval& interval) {
  return Json{{"lower", tree_to_json(interval.lower())}, {"upper", tree_to_json(interval.upper())}};
}

TamariInterval interval_from_json(const Json& j) {
  return TamariInterval(tree_from_json(field(j, "lower")), tree_from_json(field(j, "upper")));
}

Json nct_to_json(const NoncrossingTree& t) {
  Json edges = Json::array();
  for (const auto& c : t.edges()) edges.push_back(Json::array({c.a, c.b}));
  return Json{{"n", t.size()}, {"edges", edges}};
}

NoncrossingTree nct_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  std::vector<Chord> edges;
  for (const auto& [a, b] : pair_list(field(j, "edges"), "edges")) {
    edges.push_back(a < b ? Chord{a, b} : Chord{b, a});
  }
  return NoncrossingTree::from_edges(n, std::move(edges));
}

Json ncp_to_json(const NoncrossingPartition& p) {
  return Json{{"n", p.size()}, {"blocks", p.blocks()}};
}

NoncrossingPartition ncp_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  const Json& raw = field(j, "blocks");
  if (!raw.is_array()) throw ParseError("blocks must be an array of arrays");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : raw) {
    if (!b.is_array()) throw ParseError("each block must be an array");
    std::vector<int> block;
    for (const auto& x : b) block.push_back(as_int(x, "block element"));
    blocks.push_back(std::move(block));
  }
  return NoncrossingPartition::from_blocks(n, std::move(blocks));
}

Json ncp_interval_to_json(const NoncrossingPartition& lower, const NoncrossingPartition& upper) {
  return Json{{"lower", ncp_to_json(lower)}, {"upper", ncp_to_json(upper)}};
}

std::pair<NoncrossingPartition, NoncrossingPartition> ncp_interval_from_json(const Json& j) {
  auto lower = ncp_from_json(field(j, "lower"));
  auto upper = ncp_from_json(field(j, "upper"));
  if (lower.size() != upper.size()) {
    throw PreconditionError("SizeMismatch", "partitions of different ground sets");
  }
  if (!ncp_leq(lower, upper)) {
    throw PreconditionError("NotAnInterval", "lower partition does not refine upper");
  }
  return {std::move(lower), std::move(upper)};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::vector<Pair> increasing_covers(const IntervalPoset& p) {
  std::vector<Pair> out;
  for (const auto& [a, b] : hasse(p)) {
    if (a < b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Pair> decreasing_covers(const IntervalPoset& p) {
  std::vector<Pair> out;
  for (const auto& [a, b] : hasse(p)) {
    if (a > b) out.emplace_back(a, b);
  }
  return out;
}

std::string arc_diagram_dot(const IntervalPoset& p) {
  std::ostringstream os;
  os << "digraph interval_poset {\n";
  os << "  layout=neato;\n";
  os << "  node [shape=circle, fontsize=12];\n";
  for (int v = 1; v <= p.size(); ++v) os << "  " << v << " [pos=\"" << v << ",0!\"];\n";
  for (const auto& [a, b] : increasing_covers(p)) {
    os << "  " << a << " -> " << b << " [color=red, tailport=s, headport=s];\n";
  }
  for (const auto& [b, a] : decreasing_covers(p)) {
    os << "  " << b << " -> " << a << " [color=blue, tailport=n, headport=n];\n";
  }
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const IntervalPoset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, fontsize=12];\n";
  for (int v = 1; v <= p.size(); ++v) os << "  " << v << ";\n";
  for (const auto& [a, b] : hasse(p)) {
    os << "  " << a << " -> " << b << " [color=" << (a < b ? "red" : "blue") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "size,family,count,formula,match\n";
  for (const auto& row : rows) {
    for (const auto& e : row.entries()) {
      os << row.size << ',' << e.family << ',' << e.count << ',';
      if (e.formula) os << e.formula->str();
      os << ',' << (e.matches() ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

Json census_json(const std::vector<CensusRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    for (const auto& e : row.entries()) {
      out.push_back(Json{{"size", row.size},
                         {"family", e.family},
                         {"count", e.count},
                         {"formula", e.formula ? Json(e.formula->str()) : Json(nullptr)},
                         {"match", e.matches()}});
    }
  }
  return out;
}

}  // namespace tamari
