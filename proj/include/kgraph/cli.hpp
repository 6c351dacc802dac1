#pragma once
// cli.hpp — command dispatch for the kgraph tool.
//
// Exit codes: 0 success or property holds, 1 a checked property fails (the
// report carries the certificate), 2 usage or input errors. User errors are
// reported as diagnostics, never as stack traces.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgraph/boundary.hpp"
#include "kgraph/core.hpp"
#include "kgraph/extension.hpp"
#include "kgraph/family.hpp"
#include "kgraph/fixtures.hpp"
#include "kgraph/json_io.hpp"
#include "kgraph/path_space.hpp"
#include "kgraph/verify.hpp"

namespace kgraph {
namespace cli {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline Degree parse_degree_text(const std::string& text, const std::string& what) {
  std::vector<int32_t> c;
  for (const std::string& tok : split(text, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(what + ": expected comma-separated nonnegative integers");
    c.push_back(static_cast<int32_t>(std::stol(tok)));
  }
  return Degree(std::move(c));
}

inline std::vector<Path> parse_path_list(const Skeleton& s, const std::string& text) {
  std::vector<Path> out;
  for (const std::string& tok : split(text, ',')) out.push_back(parse_path(s, tok));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Skeleton load_skeleton(const std::string& path) {
  SkeletonInput in = parse_document(read_file(path));
  ValidationReport rep = validate_skeleton(in);
  if (!rep.ok()) {
    std::string msg = "invalid skeleton in " + path + ":";
    for (const Violation& v : rep.violations)
      msg += "\n  " + to_string(v.kind) + ": " + v.detail;
    throw std::invalid_argument(msg);
  }
  return build_skeleton(in);
}

inline OperatorFamily load_family(const Skeleton& s, const std::string& path) {
  json j = json::parse(read_file(path), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded())
    throw std::invalid_argument("family file is not valid JSON: " + path);
  return family_from_json(s, j);
}

inline int32_t resolve_vertex(const Skeleton& s, const std::string& name) {
  auto v = s.vertex_index(name);
  if (!v) throw std::invalid_argument("unknown vertex: " + name);
  return *v;
}

inline void print_paths(const Skeleton& s, const std::vector<Path>& ps, std::ostream& out) {
  for (const Path& p : ps) out << display(s, p) << "\n";
}

inline void print_check(const Skeleton& s, const CheckReport& rep, std::ostream& out) {
  for (const CheckRelation& r : rep.relations) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id << " (" << r.checked << " checked)\n";
    for (const CheckCounterexample& c : r.counterexamples) {
      out << " ";
      for (const Path& p : c.paths) out << " " << display(s, p);
      if (!c.note.empty()) out << "  [" << c.note << "]";
      if (c.diff)
        out << "  at (" << c.diff->row << "," << c.diff->col << "): " << c.diff->lhs
            << " vs " << c.diff->rhs;
      out << "\n";
    }
  }
  for (const auto& [name, value] : rep.flags)
    out << "flag " << name << " = " << (value ? "true" : "false") << "\n";
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finitely aligned k-graph toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, family_file, fixture_name;
  std::string vertex_name, range_name, source_name;
  std::string set_text, a_text, b_text, degree_opt, depth_text, bound_text, shape_text;
  std::string variant = "a1";
  std::vector<std::string> extra_texts;
  bool as_json = false;
  bool list_fixtures = false;

  auto graph_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", file, "graph document (JSON)")->required();
    sub->add_flag("--json", as_json, "emit the structured report");
    return sub;
  };

  graph_cmd("validate", "check the document presents a k-graph");

  CLI::App* c_paths = graph_cmd("paths", "enumerate paths");
  c_paths->add_option("--degree", degree_opt, "exact degree d1,d2,...");
  c_paths->add_option("--range", range_name, "restrict to paths with this range");
  c_paths->add_option("--source", source_name, "restrict to paths with this source");

  CLI::App* c_lmin = graph_cmd("lmin", "minimal common extensions of two paths");
  c_lmin->add_option("--a", a_text, "first path literal")->required();
  c_lmin->add_option("--b", b_text, "second path literal")->required();

  CLI::App* c_exh = graph_cmd("exhaustive", "decide whether a set is exhaustive at a vertex");
  c_exh->add_option("--vertex", vertex_name, "vertex name")->required();
  c_exh->add_option("--set", set_text, "comma-separated path literals")->required();

  CLI::App* c_pi = graph_cmd("pi", "closure of a path set under the extension rule");
  c_pi->add_option("--set", set_text, "comma-separated path literals, common range")->required();

  CLI::App* c_core = graph_cmd("core", "matrix-unit block report for a closed path set");
  c_core->add_option("--set", set_text, "comma-separated path literals, common range")->required();

  CLI::App* c_fn = graph_cmd("fn", "block report over paths of degree at most n");
  c_fn->add_option("--degree", degree_opt, "degree bound n1,n2,...")->required();

  CLI::App* c_bdy = graph_cmd("boundary", "list boundary paths (acyclic only)");
  c_bdy->add_option("--vertex", vertex_name, "restrict to boundary paths at this vertex");

  graph_cmd("boundary-rep", "boundary-path operator family (acyclic only)");

  CLI::App* c_aper = graph_cmd("aperiodicity", "aperiodicity verdict");
  c_aper->add_option("--depth", depth_text, "search depth d1,d2,... for cyclic skeletons");

  CLI::App* c_check = graph_cmd("check", "verify the defining relations of a family");
  c_check->add_option("--family", family_file, "family JSON (default: boundary representation)");
  c_check->add_option("--extra-set", extra_texts, "additional exhaustive set to test (repeatable)");

  CLI::App* c_gen = graph_cmd("check-generators", "verify the generator-level relations");
  c_gen->add_option("--family", family_file,
                    "generator family JSON (default: restricted boundary representation)");

  CLI::App* c_cls = graph_cmd("check-classical", "verify the classical relation variants");
  c_cls->add_option("--family", family_file, "family JSON (default: boundary representation)");
  c_cls->add_option("--variant", variant, "a1 (sum over degree slices) or a2 (exhaustive sums)");
  c_cls->add_option("--bound", bound_text, "degree bound n1,n2,... for variant a1");
  c_cls->add_option("--extra-set", extra_texts, "additional exhaustive set for variant a2");

  CLI::App* c_omega = app.add_subcommand("omega", "emit the model graph document for a shape");
  c_omega->add_option("--shape", shape_text, "coordinates m1,m2,... (rank = count)")->required();

  CLI::App* c_prod = app.add_subcommand("product", "emit the product graph document");
  c_prod->add_option("file_a", file, "first graph document")->required();
  c_prod->add_option("file_b", file_b, "second graph document")->required();

  CLI::App* c_fix = app.add_subcommand("fixture", "emit a named built-in graph document");
  c_fix->add_option("name", fixture_name, "fixture name");
  c_fix->add_flag("--list", list_fixtures, "list available fixtures");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().at(0)->get_name();
  try {
    if (cmd == "validate") {
      ValidationReport rep = validate_skeleton(parse_document(read_file(file)));
      if (as_json) {
        out << validation_to_json(rep).dump(2) << "\n";
      } else if (rep.ok()) {
        out << "ok\n";
      } else {
        for (const Violation& v : rep.violations) {
          out << to_string(v.kind);
          for (const std::string& id : v.ids) out << " " << id;
          out << ": " << v.detail << "\n";
        }
      }
      return rep.ok() ? 0 : 1;
    }

    if (cmd == "paths") {
      Skeleton s = load_skeleton(file);
      std::vector<Path> ps;
      if (!degree_opt.empty()) {
        Degree d = parse_degree_text(degree_opt, "--degree");
        if (d.rank() != s.rank()) throw std::invalid_argument("--degree: rank mismatch");
        if (!range_name.empty()) {
          ps = paths_with_range(s, resolve_vertex(s, range_name), d);
        } else {
          for (std::size_t v = 0; v < s.vertex_count(); ++v)
            for (Path& p : paths_with_range(s, static_cast<int32_t>(v), d))
              ps.push_back(std::move(p));
        }
      } else {
        if (!is_acyclic(s))
          throw std::invalid_argument("cyclic skeleton: give --degree to bound the enumeration");
        std::optional<int32_t> want;
        if (!range_name.empty()) want = resolve_vertex(s, range_name);
        for (Path& p : all_paths(s)) {
          if (want && p.range != *want) continue;
          ps.push_back(std::move(p));
        }
      }
      if (!source_name.empty()) {
        int32_t src = resolve_vertex(s, source_name);
        std::erase_if(ps, [&](const Path& p) { return source_of(s, p) != src; });
      }
      if (as_json) {
        json j = {{"schema", "kgraph.paths/1"}, {"paths", detail::paths_to_json(s, ps)}};
        out << j.dump(2) << "\n";
      } else {
        print_paths(s, ps, out);
      }
      return 0;
    }

    if (cmd == "lmin") {
      Skeleton s = load_skeleton(file);
      auto pairs = lambda_min(s, parse_path(s, a_text), parse_path(s, b_text));
      if (as_json) {
        json arr = json::array();
        for (const auto& [pa, pb] : pairs)
          arr.push_back({{"a", display(s, pa)}, {"b", display(s, pb)}});
        json j = {{"schema", "kgraph.lmin/1"}, {"pairs", arr}};
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [pa, pb] : pairs)
          out << display(s, pa) << " " << display(s, pb) << "\n";
      }
      return 0;
    }

    if (cmd == "exhaustive") {
      Skeleton s = load_skeleton(file);
      ExhaustiveCertificate cert =
          is_exhaustive(s, resolve_vertex(s, vertex_name), parse_path_list(s, set_text));
      if (as_json) {
        out << certificate_to_json(s, cert).dump(2) << "\n";
      } else if (cert.exhaustive) {
        out << "exhaustive\n";
      } else {
        out << "not exhaustive; witness: " << display(s, *cert.witness) << "\n";
      }
      return cert.exhaustive ? 0 : 1;
    }

    if (cmd == "pi") {
      Skeleton s = load_skeleton(file);
      PiClosure pc = pi_closure(s, parse_path_list(s, set_text));
      if (as_json) {
        out << pi_to_json(s, pc).dump(2) << "\n";
      } else {
        out << "bound: " << to_string(pc.bound) << "\n";
        print_paths(s, pc.elements, out);
      }
      return 0;
    }

    if (cmd == "core") {
      Skeleton s = load_skeleton(file);
      CoreBlockReport rep = theta_support(s, pi_closure(s, parse_path_list(s, set_text)));
      if (as_json) {
        out << core_to_json(s, rep).dump(2) << "\n";
      } else {
        out << "dimension: " << rep.total_dimension << "\n";
        for (const CoreBlock& b : rep.blocks) {
          out << "block " << to_string(b.degree) << " at " << s.vertex_name(b.source) << ":";
          for (const Path& p : b.members) out << " " << display(s, p);
          out << "\n";
        }
        if (!rep.vanishing.empty()) {
          out << "vanishing:";
          for (const Path& p : rep.vanishing) out << " " << display(s, p);
          out << "\n";
        }
      }
      return 0;
    }

    if (cmd == "fn") {
      Skeleton s = load_skeleton(file);
      FnReport rep = f_n_report(s, parse_degree_text(degree_opt, "--degree"));
      if (as_json) {
        out << fn_to_json(s, rep).dump(2) << "\n";
      } else {
        out << "dimension: " << rep.total_dimension << "\n";
        for (const FnBlock& b : rep.blocks) {
          out << "block " << to_string(b.degree) << " at " << s.vertex_name(b.source) << ":";
          for (const Path& p : b.members) out << " " << display(s, p);
          out << "\n";
        }
      }
      return 0;
    }

    if (cmd == "boundary") {
      Skeleton s = load_skeleton(file);
      std::vector<BoundaryPath> bps = vertex_name.empty()
                                          ? boundary_paths(s)
                                          : boundary_paths_at(s, resolve_vertex(s, vertex_name));
      if (as_json) {
        out << boundary_to_json(s, bps).dump(2) << "\n";
      } else {
        for (const BoundaryPath& b : bps)
          out << display(s, b.path) << " " << to_string(b.n_min) << "\n";
      }
      return 0;
    }

    if (cmd == "boundary-rep") {
      Skeleton s = load_skeleton(file);
      OperatorFamily fam = boundary_representation(s);
      if (as_json) {
        out << family_to_json(s, fam).dump(2) << "\n";
      } else {
        out << "basis: " << fam.dim() << "\n";
        out << "operators: " << fam.ops.size() << "\n";
      }
      return 0;
    }

    if (cmd == "aperiodicity") {
      Skeleton s = load_skeleton(file);
      Degree depth = depth_text.empty()
                         ? Degree(std::vector<int32_t>(s.rank(), 2))
                         : parse_degree_text(depth_text, "--depth");
      AperiodicityReport rep = aperiodicity_report(s, depth);
      if (as_json) {
        out << aperiodicity_to_json(s, rep).dump(2) << "\n";
      } else {
        out << to_string(rep.verdict) << "\n";
        if (rep.failure)
          out << "failure at " << s.vertex_name(rep.failure->vertex) << ": "
              << display(s, rep.failure->a) << " vs " << display(s, rep.failure->b) << "\n";
        if (!rep.undistinguished.empty())
          out << "undistinguished pairs: " << rep.undistinguished.size()
              << (rep.truncated ? " (truncated)" : "") << "\n";
      }
      return rep.verdict == AperiodicityReport::Verdict::ExactFails ? 1 : 0;
    }

    if (cmd == "check" || cmd == "check-generators" || cmd == "check-classical") {
      Skeleton s = load_skeleton(file);
      CheckReport rep;
      if (cmd == "check") {
        OperatorFamily fam =
            family_file.empty() ? boundary_representation(s) : load_family(s, family_file);
        std::vector<std::vector<Path>> extras;
        for (const std::string& t : extra_texts) extras.push_back(parse_path_list(s, t));
        rep = check_ck_family(s, fam, extras);
      } else if (cmd == "check-generators") {
        OperatorFamily gen = family_file.empty()
                                 ? restrict_to_generators(s, boundary_representation(s))
                                 : load_family(s, family_file);
        rep = check_generator_family(s, gen);
      } else {
        OperatorFamily fam =
            family_file.empty() ? boundary_representation(s) : load_family(s, family_file);
        if (variant != "a1" && variant != "a2")
          throw std::invalid_argument("--variant must be a1 or a2");
        if (variant == "a1" && !extra_texts.empty())
          throw std::invalid_argument("--extra-set requires --variant a2");
        std::optional<Degree> bound;
        if (!bound_text.empty()) bound = parse_degree_text(bound_text, "--bound");
        std::vector<std::vector<Path>> extras;
        for (const std::string& t : extra_texts) extras.push_back(parse_path_list(s, t));
        rep = check_variant_relations(s, fam, variant == "a1" ? Variant::A1 : Variant::A2,
                                      extras, bound);
      }
      if (as_json) out << check_to_json(s, rep).dump(2) << "\n";
      else print_check(s, rep, out);
      return rep.pass() ? 0 : 1;
    }

    if (cmd == "omega") {
      Degree m = parse_degree_text(shape_text, "--shape");
      out << input_to_document(omega_skeleton(m.rank(), m)).dump(2) << "\n";
      return 0;
    }

    if (cmd == "product") {
      Skeleton a = load_skeleton(file);
      Skeleton b = load_skeleton(file_b);
      out << input_to_document(product_skeleton(a, b)).dump(2) << "\n";
      return 0;
    }

    if (cmd == "fixture") {
      if (list_fixtures) {
        for (const std::string& name : fixture_names()) out << name << "\n";
        return 0;
      }
      if (fixture_name.empty())
        throw std::invalid_argument("fixture: give a name or --list");
      out << input_to_document(fixture(fixture_name)).dump(2) << "\n";
      return 0;
    }

    throw std::logic_error("unhandled subcommand: " + cmd);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace kgraph
