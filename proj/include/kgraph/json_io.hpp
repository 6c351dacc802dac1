#pragma once
// json_io.hpp — the graph document format and versioned JSON report
// serializers.
//
// Document format:
//   {"k": 2,
//    "vertices": ["v", ...],
//    "edges": [{"id": "e", "color": 1, "range": "v", "source": "a"}, ...],
//    "squares": [{"path_a": ["e", "f"], "path_b": ["g", "h"]}, ...]}
// `squares` may be omitted and defaults to []. Parsing is strict: an unknown
// key at any level is an error, so a typo fails loudly instead of silently
// building a different graph.
//
// Every report serializer stamps a versioned "schema" field and has an exact
// inverse: parse(emit(x)) == x field for field. Paths travel as display
// strings and are re-parsed against the skeleton; vertices travel as names.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgraph/boundary.hpp"
#include "kgraph/core.hpp"
#include "kgraph/degree.hpp"
#include "kgraph/extension.hpp"
#include "kgraph/family.hpp"
#include "kgraph/path.hpp"
#include "kgraph/skeleton.hpp"
#include "kgraph/sparse.hpp"
#include "kgraph/verify.hpp"

namespace kgraph {

using json = nlohmann::json;

inline constexpr const char* kValidationSchema   = "kgraph.validation/1";
inline constexpr const char* kExhaustiveSchema   = "kgraph.exhaustive/1";
inline constexpr const char* kPiSchema           = "kgraph.pi/1";
inline constexpr const char* kCoreSchema         = "kgraph.core/1";
inline constexpr const char* kFnSchema           = "kgraph.fn/1";
inline constexpr const char* kBoundarySchema     = "kgraph.boundary/1";
inline constexpr const char* kAperiodicitySchema = "kgraph.aperiodicity/1";
inline constexpr const char* kCheckSchema        = "kgraph.check/1";
inline constexpr const char* kFamilySchema       = "kgraph.family/1";

namespace detail {

inline void expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
}

inline void expect_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
}

// Strictness: every present key must be in `known`, every key in `required`
// must be present.
inline void expect_keys(const json& j, const std::string& where,
                        std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional = {}) {
  expect_object(j, where);
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    bool ok = false;
    for (const char* k : required)
      if (key == k) { ok = true; break; }
    for (const char* k : optional)
      if (key == k) { ok = true; break; }
    if (!ok) throw std::invalid_argument(where + ": unknown key \"" + key + "\"");
  }
  for (const char* k : required)
    if (!j.contains(k))
      throw std::invalid_argument(where + ": missing key \"" + std::string(k) + "\"");
}

inline std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw std::invalid_argument(where + ": expected a string");
  return j.get<std::string>();
}

inline int64_t get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw std::invalid_argument(where + ": expected an integer");
  return j.get<int64_t>();
}

inline bool get_bool(const json& j, const std::string& where) {
  if (!j.is_boolean()) throw std::invalid_argument(where + ": expected a boolean");
  return j.get<bool>();
}

inline std::vector<std::string> get_strings(const json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline void expect_schema(const json& j, const char* schema, const std::string& where) {
  expect_object(j, where);
  if (!j.contains("schema"))
    throw std::invalid_argument(where + ": missing key \"schema\"");
  std::string got = get_string(j["schema"], where + ".schema");
  if (got != schema)
    throw std::invalid_argument(where + ": expected schema \"" + schema + "\", got \"" + got + "\"");
}

inline json degree_to_json(const Degree& d) {
  json out = json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) out.push_back(d[i]);
  return out;
}

inline Degree degree_from_json(const json& j, std::size_t rank, const std::string& where) {
  expect_array(j, where);
  if (j.size() != rank)
    throw std::invalid_argument(where + ": expected " + std::to_string(rank) + " coordinates");
  std::vector<int32_t> c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    int64_t v = get_int(j[i], where + "[" + std::to_string(i) + "]");
    if (v < 0) throw std::invalid_argument(where + ": negative coordinate");
    c.push_back(static_cast<int32_t>(v));
  }
  return Degree(std::move(c));
}

inline json paths_to_json(const Skeleton& s, const std::vector<Path>& ps) {
  json out = json::array();
  for (const Path& p : ps) out.push_back(display(s, p));
  return out;
}

inline std::vector<Path> paths_from_json(const Skeleton& s, const json& j,
                                         const std::string& where) {
  expect_array(j, where);
  std::vector<Path> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_path(s, get_string(j[i], where + "[" + std::to_string(i) + "]")));
  return out;
}

inline int32_t vertex_from_json(const Skeleton& s, const json& j, const std::string& where) {
  std::string name = get_string(j, where);
  auto v = s.vertex_index(name);
  if (!v) throw std::invalid_argument(where + ": unknown vertex \"" + name + "\"");
  return *v;
}

}  // namespace detail

// -------- graph documents --------

inline SkeletonInput document_to_input(const json& doc) {
  const std::string where = "document";
  detail::expect_keys(doc, where, {"k", "vertices", "edges"}, {"squares"});

  SkeletonInput in;
  int64_t k = detail::get_int(doc["k"], where + ".k");
  if (k < 1) throw std::invalid_argument(where + ".k: rank must be at least 1");
  in.rank = static_cast<int32_t>(k);
  in.vertices = detail::get_strings(doc["vertices"], where + ".vertices");

  const json& edges = doc["edges"];
  detail::expect_array(edges, where + ".edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ew = where + ".edges[" + std::to_string(i) + "]";
    detail::expect_keys(edges[i], ew, {"id", "color", "range", "source"});
    EdgeInput e;
    e.id = detail::get_string(edges[i]["id"], ew + ".id");
    e.color = static_cast<int32_t>(detail::get_int(edges[i]["color"], ew + ".color"));
    e.range = detail::get_string(edges[i]["range"], ew + ".range");
    e.source = detail::get_string(edges[i]["source"], ew + ".source");
    in.edges.push_back(std::move(e));
  }

  if (doc.contains("squares")) {
    const json& squares = doc["squares"];
    detail::expect_array(squares, where + ".squares");
    for (std::size_t i = 0; i < squares.size(); ++i) {
      const std::string qw = where + ".squares[" + std::to_string(i) + "]";
      detail::expect_keys(squares[i], qw, {"path_a", "path_b"});
      SquareInput q;
      for (const char* side : {"path_a", "path_b"}) {
        const json& arr = squares[i][side];
        const std::string sw = qw + "." + side;
        detail::expect_array(arr, sw);
        if (arr.size() != 2)
          throw std::invalid_argument(sw + ": expected exactly 2 edge ids");
        auto& target = (std::string(side) == "path_a") ? q.path_a : q.path_b;
        target[0] = detail::get_string(arr[0], sw + "[0]");
        target[1] = detail::get_string(arr[1], sw + "[1]");
      }
      in.squares.push_back(std::move(q));
    }
  }
  return in;
}

inline SkeletonInput parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded())
    throw std::invalid_argument("document: input is not valid JSON");
  return document_to_input(doc);
}

inline json input_to_document(const SkeletonInput& in) {
  json edges = json::array();
  for (const EdgeInput& e : in.edges)
    edges.push_back({{"id", e.id}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
  json squares = json::array();
  for (const SquareInput& q : in.squares)
    squares.push_back({{"path_a", {q.path_a[0], q.path_a[1]}},
                       {"path_b", {q.path_b[0], q.path_b[1]}}});
  return {{"k", in.rank}, {"vertices", in.vertices}, {"edges", edges}, {"squares", squares}};
}

inline json skeleton_to_document(const Skeleton& s) {
  SkeletonInput in;
  in.rank = static_cast<int32_t>(s.rank());
  in.vertices = s.vertex_names();
  for (const Edge& e : s.edges())
    in.edges.push_back({e.id, e.color, s.vertex_name(e.range), s.vertex_name(e.source)});
  for (const Square& q : s.squares())
    in.squares.push_back({{s.edge(q.x).id, s.edge(q.y).id}, {s.edge(q.u).id, s.edge(q.w).id}});
  return input_to_document(in);
}

// -------- validation reports --------

inline ViolationKind violation_kind_from_string(const std::string& text) {
  for (ViolationKind k : {ViolationKind::MissingSquare, ViolationKind::DuplicateSquare,
                          ViolationKind::NonBijective, ViolationKind::CubeFailure,
                          ViolationKind::DanglingEndpoint})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("violation kind: unknown \"" + text + "\"");
}

inline json validation_to_json(const ValidationReport& rep) {
  json violations = json::array();
  for (const Violation& v : rep.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"ids", v.ids}, {"detail", v.detail}});
  return {{"schema", kValidationSchema}, {"ok", rep.ok()}, {"violations", violations}};
}

inline ValidationReport validation_from_json(const json& j) {
  const std::string where = "validation report";
  detail::expect_schema(j, kValidationSchema, where);
  detail::expect_keys(j, where, {"schema", "ok", "violations"});
  ValidationReport rep;
  const json& vs = j["violations"];
  detail::expect_array(vs, where + ".violations");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string vw = where + ".violations[" + std::to_string(i) + "]";
    detail::expect_keys(vs[i], vw, {"kind", "ids", "detail"});
    Violation v;
    v.kind = violation_kind_from_string(detail::get_string(vs[i]["kind"], vw + ".kind"));
    v.ids = detail::get_strings(vs[i]["ids"], vw + ".ids");
    v.detail = detail::get_string(vs[i]["detail"], vw + ".detail");
    rep.violations.push_back(std::move(v));
  }
  return rep;
}

// -------- exhaustiveness certificates --------

inline json certificate_to_json(const Skeleton& s, const ExhaustiveCertificate& cert) {
  json visited = json::array();
  for (const ExhaustiveState& st : cert.visited)
    visited.push_back({{"vertex", s.vertex_name(st.vertex)},
                       {"set", detail::paths_to_json(s, st.set)},
                       {"exhaustive", st.exhaustive}});
  json out = {{"schema", kExhaustiveSchema},
              {"exhaustive", cert.exhaustive},
              {"visited", visited}};
  out["witness"] = cert.witness ? json(display(s, *cert.witness)) : json(nullptr);
  return out;
}

inline ExhaustiveCertificate certificate_from_json(const Skeleton& s, const json& j) {
  const std::string where = "exhaustiveness certificate";
  detail::expect_schema(j, kExhaustiveSchema, where);
  detail::expect_keys(j, where, {"schema", "exhaustive", "witness", "visited"});
  ExhaustiveCertificate cert;
  cert.exhaustive = detail::get_bool(j["exhaustive"], where + ".exhaustive");
  if (!j["witness"].is_null())
    cert.witness = parse_path(s, detail::get_string(j["witness"], where + ".witness"));
  const json& vs = j["visited"];
  detail::expect_array(vs, where + ".visited");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string vw = where + ".visited[" + std::to_string(i) + "]";
    detail::expect_keys(vs[i], vw, {"vertex", "set", "exhaustive"});
    ExhaustiveState st;
    st.vertex = detail::vertex_from_json(s, vs[i]["vertex"], vw + ".vertex");
    st.set = detail::paths_from_json(s, vs[i]["set"], vw + ".set");
    st.exhaustive = detail::get_bool(vs[i]["exhaustive"], vw + ".exhaustive");
    cert.visited.push_back(std::move(st));
  }
  return cert;
}

// -------- ΠE closures --------

inline json pi_to_json(const Skeleton& s, const PiClosure& pc) {
  return {{"schema", kPiSchema},
          {"base", detail::paths_to_json(s, pc.base)},
          {"elements", detail::paths_to_json(s, pc.elements)},
          {"bound", detail::degree_to_json(pc.bound)}};
}

inline PiClosure pi_from_json(const Skeleton& s, const json& j) {
  const std::string where = "closure report";
  detail::expect_schema(j, kPiSchema, where);
  detail::expect_keys(j, where, {"schema", "base", "elements", "bound"});
  PiClosure pc;
  pc.base = detail::paths_from_json(s, j["base"], where + ".base");
  pc.elements = detail::paths_from_json(s, j["elements"], where + ".elements");
  pc.bound = detail::degree_from_json(j["bound"], s.rank(), where + ".bound");
  return pc;
}

// -------- core block reports --------

inline json core_to_json(const Skeleton& s, const CoreBlockReport& rep) {
  json blocks = json::array();
  for (const CoreBlock& b : rep.blocks)
    blocks.push_back({{"degree", detail::degree_to_json(b.degree)},
                      {"source", s.vertex_name(b.source)},
                      {"size", b.members.size()},
                      {"members", detail::paths_to_json(s, b.members)}});
  json certificates = json::object();
  for (const auto& [key, cert] : rep.certificates)
    certificates[key] = certificate_to_json(s, cert);
  return {{"schema", kCoreSchema},
          {"blocks", blocks},
          {"vanishing", detail::paths_to_json(s, rep.vanishing)},
          {"certificates", certificates},
          {"dimension", rep.total_dimension}};
}

inline CoreBlockReport core_from_json(const Skeleton& s, const json& j) {
  const std::string where = "core report";
  detail::expect_schema(j, kCoreSchema, where);
  detail::expect_keys(j, where, {"schema", "blocks", "vanishing", "certificates", "dimension"});
  CoreBlockReport rep;
  const json& bs = j["blocks"];
  detail::expect_array(bs, where + ".blocks");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const std::string bw = where + ".blocks[" + std::to_string(i) + "]";
    detail::expect_keys(bs[i], bw, {"degree", "source", "size", "members"});
    CoreBlock b;
    b.degree = detail::degree_from_json(bs[i]["degree"], s.rank(), bw + ".degree");
    b.source = detail::vertex_from_json(s, bs[i]["source"], bw + ".source");
    b.members = detail::paths_from_json(s, bs[i]["members"], bw + ".members");
    if (detail::get_int(bs[i]["size"], bw + ".size") != static_cast<int64_t>(b.members.size()))
      throw std::invalid_argument(bw + ".size: does not match members");
    rep.blocks.push_back(std::move(b));
  }
  rep.vanishing = detail::paths_from_json(s, j["vanishing"], where + ".vanishing");
  detail::expect_object(j["certificates"], where + ".certificates");
  for (const auto& item : j["certificates"].items())
    rep.certificates.emplace(item.key(), certificate_from_json(s, item.value()));
  rep.total_dimension = detail::get_int(j["dimension"], where + ".dimension");
  return rep;
}

// -------- Λ^{≤n} block reports --------

inline json fn_to_json(const Skeleton& s, const FnReport& rep) {
  json blocks = json::array();
  for (const FnBlock& b : rep.blocks)
    blocks.push_back({{"source", s.vertex_name(b.source)},
                      {"degree", detail::degree_to_json(b.degree)},
                      {"size", b.members.size()},
                      {"members", detail::paths_to_json(s, b.members)}});
  return {{"schema", kFnSchema},
          {"n", detail::degree_to_json(rep.n)},
          {"blocks", blocks},
          {"dimension", rep.total_dimension}};
}

inline FnReport fn_from_json(const Skeleton& s, const json& j) {
  const std::string where = "approximation report";
  detail::expect_schema(j, kFnSchema, where);
  detail::expect_keys(j, where, {"schema", "n", "blocks", "dimension"});
  FnReport rep;
  rep.n = detail::degree_from_json(j["n"], s.rank(), where + ".n");
  const json& bs = j["blocks"];
  detail::expect_array(bs, where + ".blocks");
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const std::string bw = where + ".blocks[" + std::to_string(i) + "]";
    detail::expect_keys(bs[i], bw, {"source", "degree", "size", "members"});
    FnBlock b;
    b.source = detail::vertex_from_json(s, bs[i]["source"], bw + ".source");
    b.degree = detail::degree_from_json(bs[i]["degree"], s.rank(), bw + ".degree");
    b.members = detail::paths_from_json(s, bs[i]["members"], bw + ".members");
    if (detail::get_int(bs[i]["size"], bw + ".size") != static_cast<int64_t>(b.members.size()))
      throw std::invalid_argument(bw + ".size: does not match members");
    rep.blocks.push_back(std::move(b));
  }
  rep.total_dimension = detail::get_int(j["dimension"], where + ".dimension");
  return rep;
}

// -------- boundary path listings --------

inline json boundary_to_json(const Skeleton& s, const std::vector<BoundaryPath>& bps) {
  json paths = json::array();
  for (const BoundaryPath& b : bps)
    paths.push_back({{"path", display(s, b.path)},
                     {"marker", detail::degree_to_json(b.n_min)}});
  return {{"schema", kBoundarySchema}, {"paths", paths}};
}

inline std::vector<BoundaryPath> boundary_from_json(const Skeleton& s, const json& j) {
  const std::string where = "boundary report";
  detail::expect_schema(j, kBoundarySchema, where);
  detail::expect_keys(j, where, {"schema", "paths"});
  std::vector<BoundaryPath> out;
  const json& ps = j["paths"];
  detail::expect_array(ps, where + ".paths");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string pw = where + ".paths[" + std::to_string(i) + "]";
    detail::expect_keys(ps[i], pw, {"path", "marker"});
    BoundaryPath b;
    b.path = parse_path(s, detail::get_string(ps[i]["path"], pw + ".path"));
    b.n_min = detail::degree_from_json(ps[i]["marker"], s.rank(), pw + ".marker");
    out.push_back(std::move(b));
  }
  return out;
}

// -------- aperiodicity reports --------

inline AperiodicityReport::Verdict verdict_from_string(const std::string& text) {
  for (AperiodicityReport::Verdict v : {AperiodicityReport::Verdict::ExactHolds,
                                        AperiodicityReport::Verdict::ExactFails,
                                        AperiodicityReport::Verdict::Inconclusive})
    if (to_string(v) == text) return v;
  throw std::invalid_argument("verdict: unknown \"" + text + "\"");
}

namespace detail {

inline json pair_to_json(const Skeleton& s, const AperiodicityReport::Pair& p) {
  return {{"vertex", s.vertex_name(p.vertex)},
          {"a", display(s, p.a)},
          {"b", display(s, p.b)}};
}

inline AperiodicityReport::Pair pair_from_json(const Skeleton& s, const json& j,
                                               const std::string& where) {
  expect_keys(j, where, {"vertex", "a", "b"});
  AperiodicityReport::Pair p;
  p.vertex = vertex_from_json(s, j["vertex"], where + ".vertex");
  p.a = parse_path(s, get_string(j["a"], where + ".a"));
  p.b = parse_path(s, get_string(j["b"], where + ".b"));
  return p;
}

}  // namespace detail

inline json aperiodicity_to_json(const Skeleton& s, const AperiodicityReport& rep) {
  json undistinguished = json::array();
  for (const AperiodicityReport::Pair& p : rep.undistinguished)
    undistinguished.push_back(detail::pair_to_json(s, p));
  json out = {{"schema", kAperiodicitySchema},
              {"verdict", to_string(rep.verdict)},
              {"undistinguished", undistinguished},
              {"truncated", rep.truncated}};
  out["failure"] = rep.failure ? detail::pair_to_json(s, *rep.failure) : json(nullptr);
  return out;
}

inline AperiodicityReport aperiodicity_from_json(const Skeleton& s, const json& j) {
  const std::string where = "aperiodicity report";
  detail::expect_schema(j, kAperiodicitySchema, where);
  detail::expect_keys(j, where, {"schema", "verdict", "failure", "undistinguished", "truncated"});
  AperiodicityReport rep;
  rep.verdict = verdict_from_string(detail::get_string(j["verdict"], where + ".verdict"));
  if (!j["failure"].is_null())
    rep.failure = detail::pair_from_json(s, j["failure"], where + ".failure");
  const json& us = j["undistinguished"];
  detail::expect_array(us, where + ".undistinguished");
  for (std::size_t i = 0; i < us.size(); ++i)
    rep.undistinguished.push_back(detail::pair_from_json(
        s, us[i], where + ".undistinguished[" + std::to_string(i) + "]"));
  rep.truncated = detail::get_bool(j["truncated"], where + ".truncated");
  return rep;
}

// -------- relation check reports --------

inline json check_to_json(const Skeleton& s, const CheckReport& rep) {
  json relations = json::array();
  for (const CheckRelation& r : rep.relations) {
    json counterexamples = json::array();
    for (const CheckCounterexample& c : r.counterexamples) {
      json cx = {{"paths", detail::paths_to_json(s, c.paths)}, {"note", c.note}};
      cx["diff"] = c.diff ? json({{"row", c.diff->row},
                                  {"col", c.diff->col},
                                  {"lhs", c.diff->lhs},
                                  {"rhs", c.diff->rhs}})
                          : json(nullptr);
      counterexamples.push_back(std::move(cx));
    }
    relations.push_back({{"id", r.id},
                         {"pass", r.pass},
                         {"checked", r.checked},
                         {"counterexamples", counterexamples}});
  }
  return {{"schema", kCheckSchema},
          {"pass", rep.pass()},
          {"relations", relations},
          {"flags", rep.flags}};
}

inline CheckReport check_from_json(const Skeleton& s, const json& j) {
  const std::string where = "check report";
  detail::expect_schema(j, kCheckSchema, where);
  detail::expect_keys(j, where, {"schema", "pass", "relations", "flags"});
  CheckReport rep;
  const json& rs = j["relations"];
  detail::expect_array(rs, where + ".relations");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string rw = where + ".relations[" + std::to_string(i) + "]";
    detail::expect_keys(rs[i], rw, {"id", "pass", "checked", "counterexamples"});
    CheckRelation r;
    r.id = detail::get_string(rs[i]["id"], rw + ".id");
    r.pass = detail::get_bool(rs[i]["pass"], rw + ".pass");
    r.checked = static_cast<std::size_t>(detail::get_int(rs[i]["checked"], rw + ".checked"));
    const json& cs = rs[i]["counterexamples"];
    detail::expect_array(cs, rw + ".counterexamples");
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const std::string cw = rw + ".counterexamples[" + std::to_string(c) + "]";
      detail::expect_keys(cs[c], cw, {"paths", "diff", "note"});
      CheckCounterexample cx;
      cx.paths = detail::paths_from_json(s, cs[c]["paths"], cw + ".paths");
      if (!cs[c]["diff"].is_null()) {
        const json& d = cs[c]["diff"];
        detail::expect_keys(d, cw + ".diff", {"row", "col", "lhs", "rhs"});
        IntMatrix::Difference diff;
        diff.row = static_cast<std::size_t>(detail::get_int(d["row"], cw + ".diff.row"));
        diff.col = static_cast<std::size_t>(detail::get_int(d["col"], cw + ".diff.col"));
        diff.lhs = detail::get_int(d["lhs"], cw + ".diff.lhs");
        diff.rhs = detail::get_int(d["rhs"], cw + ".diff.rhs");
        cx.diff = diff;
      }
      cx.note = detail::get_string(cs[c]["note"], cw + ".note");
      r.counterexamples.push_back(std::move(cx));
    }
    rep.relations.push_back(std::move(r));
  }
  detail::expect_object(j["flags"], where + ".flags");
  for (const auto& item : j["flags"].items())
    rep.flags[item.key()] = detail::get_bool(item.value(), where + ".flags." + item.key());
  return rep;
}

// -------- operator families --------

// `ops` maps path display strings to [row, col, value] triplets; entries are
// exact integers and the round trip is bit-exact.
inline json family_to_json(const Skeleton& s, const OperatorFamily& fam) {
  json ops = json::object();
  for (const auto& [p, m] : fam.ops) {
    json triplets = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r))
        triplets.push_back({r, c, v});
    ops[display(s, p)] = std::move(triplets);
  }
  json out = {{"schema", kFamilySchema}, {"basis", fam.basis}, {"ops", ops}};
  out["degree_bound"] =
      fam.degree_bound ? detail::degree_to_json(*fam.degree_bound) : json(nullptr);
  return out;
}

inline OperatorFamily family_from_json(const Skeleton& s, const json& j) {
  const std::string where = "family";
  detail::expect_schema(j, kFamilySchema, where);
  detail::expect_keys(j, where, {"schema", "basis", "ops", "degree_bound"});
  OperatorFamily fam;
  fam.basis = detail::get_strings(j["basis"], where + ".basis");
  if (!j["degree_bound"].is_null())
    fam.degree_bound =
        detail::degree_from_json(j["degree_bound"], s.rank(), where + ".degree_bound");
  const std::size_t dim = fam.basis.size();
  detail::expect_object(j["ops"], where + ".ops");
  for (const auto& item : j["ops"].items()) {
    const std::string ow = where + ".ops[\"" + item.key() + "\"]";
    Path p = parse_path(s, item.key());
    IntMatrix m(dim, dim);
    detail::expect_array(item.value(), ow);
    for (std::size_t t = 0; t < item.value().size(); ++t) {
      const json& triple = item.value()[t];
      const std::string tw = ow + "[" + std::to_string(t) + "]";
      detail::expect_array(triple, tw);
      if (triple.size() != 3)
        throw std::invalid_argument(tw + ": expected [row, col, value]");
      int64_t r = detail::get_int(triple[0], tw + "[0]");
      int64_t c = detail::get_int(triple[1], tw + "[1]");
      int64_t v = detail::get_int(triple[2], tw + "[2]");
      if (r < 0 || r >= static_cast<int64_t>(dim) || c < 0 || c >= static_cast<int64_t>(dim))
        throw std::invalid_argument(tw + ": index outside the basis");
      m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
    }
    fam.ops.emplace(std::move(p), std::move(m));
  }
  return fam;
}

}  // namespace kgraph
