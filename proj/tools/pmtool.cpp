// pmtool: command-line surface for the pseudomanifold library.
//
// Exit codes: 0 = success / predicate true, 1 = predicate false,
// 2 = usage or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pm/bounds.hpp"
#include "pm/catalog.hpp"
#include "pm/moves.hpp"
#include "pm/rigidity.hpp"
#include "pm/scx.hpp"
#include "pm/stacked.hpp"
#include "pm/verify.hpp"

using nlohmann::json;
using namespace pm;

namespace {

Complex load(const std::string& path) {
  if (path == "-") return read_scx(std::cin);
  return read_scx_file(path);
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

std::vector<std::pair<std::string, std::string>> split_pairs(const std::string& csv) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& item : split_csv(csv)) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::ParseError, "pair '" + item + "' must be domain:range");
    out.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  return out;
}

std::vector<long long> split_ints(const std::string& csv) {
  std::vector<long long> out;
  for (const std::string& item : split_csv(csv)) out.push_back(std::stoll(item));
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("PMTOOL_WORKERS")) return std::atoi(env);
  return 0;
}

void maybe_record(const SurgeryRecord& rec, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) fail(ErrorCode::ParseError, "cannot open record file '" + path + "'");
  out << rec.to_text() << '\n';
}

json report_json(const ClassReport& r) {
  json j{{"n", r.n},
         {"dim", r.dim},
         {"pure", r.is_pure},
         {"weak_pm", r.is_weak_pm},
         {"weak_pm_with_boundary", r.is_weak_pm_with_boundary},
         {"strongly_connected", r.is_strongly_connected},
         {"pseudomanifold", r.is_pseudomanifold},
         {"normal_pm", r.is_normal},
         {"closed_2manifold", r.is_closed_2manifold},
         {"euler", r.euler}};
  if (r.is_orientable) j["orientable"] = *r.is_orientable;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

json report_json(const RigidityReport& r) {
  json j{{"rigid", r.verdict},
         {"q", r.q},
         {"n", r.n},
         {"d", r.d},
         {"edges", r.edges_total},
         {"bound", r.minimal_bound},
         {"subsets_examined", r.subsets_examined},
         {"subsets_pruned", r.subsets_pruned}};
  if (r.minimal) j["minimal"] = *r.minimal;
  if (r.disconnected) j["witness"] = "disconnected";
  else if (r.witness) {
    j["witness"] = *r.witness;
    j["witness_edges"] = r.witness_edges;
    j["witness_bound"] = r.witness_bound;
  }
  return j;
}

json report_json(const BoundReport& r) {
  json per = json::array();
  for (const BoundEntry& e : r.per_j)
    per.push_back({{"j", e.j}, {"observed", e.observed}, {"bound", e.bound}, {"slack", e.slack}});
  json j{{"per_j", per},
         {"holds", r.holds()},
         {"equality_any", r.equality_any},
         {"equality_all", r.equality_all}};
  if (r.stacked_verdict) j["stacked"] = *r.stacked_verdict;
  if (r.topology_note) j["topology"] = *r.topology_note;
  return j;
}

struct Options {
  bool json_out = false;
};

int run(int argc, char** argv) {
  CLI::App app{"normal pseudomanifold toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_out, "emit machine-readable reports");

  int exit_code = 0;
  std::string file = "-", file2, out_record;

  // ---- check ------------------------------------------------------------
  auto* check = app.add_subcommand("check", "classify a complex");
  check->add_option("file", file, "SCX file or - for stdin");
  check->callback([&] {
    ClassReport r = classify(load(file));
    if (opt.json_out) std::cout << report_json(r).dump(2) << '\n';
    else std::cout << r.to_text();
    exit_code = r.is_normal ? 0 : 1;
  });

  // ---- fvec ---------------------------------------------------------------
  auto* fvec = app.add_subcommand("fvec", "face vector of a complex");
  fvec->add_option("file", file, "SCX file or - for stdin");
  auto* fvec_check = fvec->add_subcommand("check", "bound check on a raw face vector");
  int opt_d = 0, opt_k = 1;
  std::string raw_vector;
  fvec_check->add_option("--d", opt_d, "dimension")->required();
  fvec_check->add_option("--k", opt_k, "stackedness parameter (default 1)");
  fvec_check->add_option("vector", raw_vector, "comma-separated f_0,...,f_d")->required();
  fvec_check->callback([&] {
    FaceVector f(split_ints(raw_vector));
    BoundReport r = glbc_check(f, opt_d, opt_k);
    if (opt.json_out) std::cout << report_json(r).dump(2) << '\n';
    else std::cout << r.to_text();
    exit_code = r.holds() ? 0 : 1;
  });
  fvec->callback([&] {
    if (fvec_check->parsed()) return;
    FaceVector f = load(file).f_vector();
    if (opt.json_out)
      std::cout << json{{"f", f.counts}, {"euler", f.euler()}}.dump(2) << '\n';
    else std::cout << "f=" << f.to_string() << "\neuler=" << f.euler() << '\n';
  });

  // ---- subcomplex constructions -----------------------------------------
  std::string face_csv, vertex_tok, vertices_csv, new_tok;

  auto* link_cmd = app.add_subcommand("link", "link of a face");
  link_cmd->add_option("--face", face_csv, "comma-separated tokens")->required();
  link_cmd->add_option("file", file);
  link_cmd->callback([&] {
    Complex c = load(file);
    std::cout << write_scx(c.link(c.face_from_tokens(split_csv(face_csv))));
  });

  auto* star_cmd = app.add_subcommand("star", "star of a vertex");
  star_cmd->add_option("--vertex", vertex_tok)->required();
  star_cmd->add_option("file", file);
  star_cmd->callback([&] {
    Complex c = load(file);
    std::cout << write_scx(c.star(c.require_vertex(vertex_tok)));
  });

  auto* ast_cmd = app.add_subcommand("antistar", "faces disjoint from a face");
  ast_cmd->add_option("--face", face_csv)->required();
  ast_cmd->add_option("file", file);
  ast_cmd->callback([&] {
    Complex c = load(file);
    std::cout << write_scx(c.antistar(c.face_from_tokens(split_csv(face_csv))));
  });

  auto* ind_cmd = app.add_subcommand("induced", "induced subcomplex");
  ind_cmd->add_option("--vertices", vertices_csv)->required();
  ind_cmd->add_option("file", file);
  ind_cmd->callback([&] {
    Complex c = load(file);
    std::cout << write_scx(c.induced(c.face_from_tokens(split_csv(vertices_csv))));
  });

  auto* join_cmd = app.add_subcommand("join", "join of two complexes");
  join_cmd->add_option("file1", file)->required();
  join_cmd->add_option("file2", file2)->required();
  join_cmd->callback([&] { std::cout << write_scx(Complex::join(load(file), load(file2))); });

  auto* suspend_cmd = app.add_subcommand("suspend", "one-point suspension");
  suspend_cmd->add_option("--u", vertex_tok, "existing vertex")->required();
  suspend_cmd->add_option("--new", new_tok, "fresh vertex token")->required();
  suspend_cmd->add_option("file", file);
  suspend_cmd->callback([&] {
    Complex c = load(file);
    std::cout << write_scx(Complex::one_point_suspension(c, c.require_vertex(vertex_tok), new_tok));
  });

  // ---- moves --------------------------------------------------------------
  auto* move = app.add_subcommand("move", "subdivision moves");
  move->require_subcommand(1);
  auto* move_star = move->add_subcommand("star", "subdivide a facet");
  move_star->add_option("--facet", face_csv)->required();
  move_star->add_option("--new", new_tok)->required();
  move_star->add_option("--record", out_record, "append the surgery record here");
  move_star->add_option("file", file);
  move_star->callback([&] {
    Complex c = load(file);
    SurgeryRecord rec;
    Complex out = star_vertex(c, c.face_from_tokens(split_csv(face_csv)), new_tok, &rec);
    maybe_record(rec, out_record);
    std::cout << write_scx(out);
  });
  auto* move_collapse = move->add_subcommand("collapse", "remove a minimal-degree vertex");
  move_collapse->add_option("--vertex", vertex_tok)->required();
  move_collapse->add_option("--record", out_record);
  move_collapse->add_option("file", file);
  move_collapse->callback([&] {
    Complex c = load(file);
    SurgeryRecord rec;
    Complex out = collapse_vertex(c, c.require_vertex(vertex_tok), &rec);
    maybe_record(rec, out_record);
    std::cout << write_scx(out);
  });
  std::string script_path;
  auto* move_replay = move->add_subcommand("replay", "apply a surgery script");
  move_replay->add_option("--script", script_path)->required();
  move_replay->add_option("file", file);
  move_replay->callback([&] {
    Complex c = load(file);
    std::ifstream in(script_path);
    if (!in) fail(ErrorCode::ParseError, "cannot open script '" + script_path + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      c = SurgeryRecord::from_text(line).apply(c);
    }
    std::cout << write_scx(c);
  });

  // ---- handle -------------------------------------------------------------
  std::string map_csv, set_csv;
  auto* handle = app.add_subcommand("handle", "handle surgery");
  handle->require_subcommand(1);
  auto* handle_add_cmd = handle->add_subcommand("add", "identify two facets");
  handle_add_cmd->add_option("--map", map_csv, "a:b,c:d,... domain:range pairs");
  bool auto_pair = false;
  handle_add_cmd->add_flag("--auto", auto_pair, "use the first admissible facet pair");
  handle_add_cmd->add_option("--record", out_record);
  handle_add_cmd->add_option("file", file);
  handle_add_cmd->callback([&] {
    Complex c = load(file);
    Bijection psi;
    if (auto_pair) {
      auto found = find_admissible_pair(c);
      if (!found) fail(ErrorCode::NotAdmissible, "no admissible facet pair exists");
      psi = *found;
    } else if (!map_csv.empty()) {
      psi.pairs = split_pairs(map_csv);
    } else {
      fail(ErrorCode::ParseError, "need --map or --auto");
    }
    SurgeryRecord rec;
    Complex out = handle_add(c, psi, &rec);
    maybe_record(rec, out_record);
    std::cout << write_scx(out);
  });
  auto* handle_del = handle->add_subcommand("delete", "cut along an induced sphere");
  handle_del->add_option("--set", set_csv, "vertex tokens of the sphere")->required();
  handle_del->add_option("--record", out_record);
  handle_del->add_option("file", file);
  handle_del->callback([&] {
    Complex c = load(file);
    SurgeryRecord rec;
    Complex out = handle_delete(c, c.face_from_tokens(split_csv(set_csv)), &rec);
    maybe_record(rec, out_record);
    std::cout << write_scx(out);
  });

  // ---- connected sum ------------------------------------------------------
  std::string facet1_csv, facet2_csv;
  auto* consum = app.add_subcommand("consum", "connected sum of two complexes");
  consum->add_option("--facet1", facet1_csv)->required();
  consum->add_option("--facet2", facet2_csv)->required();
  consum->add_option("--map", map_csv, "optional explicit pairing a:b,...");
  consum->add_option("--record", out_record);
  consum->add_option("file1", file)->required();
  consum->add_option("file2", file2)->required();
  consum->callback([&] {
    Complex x1 = load(file), x2 = load(file2);
    SurgeryRecord rec;
    Complex out = connected_sum(x1, x1.face_from_tokens(split_csv(facet1_csv)), x2,
                                x2.face_from_tokens(split_csv(facet2_csv)),
                                map_csv.empty() ? std::vector<std::pair<std::string, std::string>>{}
                                                : split_pairs(map_csv),
                                &rec);
    maybe_record(rec, out_record);
    std::cout << write_scx(out);
  });

  // ---- gbm ----------------------------------------------------------------
  std::string b1_path, b2_path;
  auto* gbm_cmd = app.add_subcommand("gbm", "replace a sub-ball by another");
  gbm_cmd->add_option("--b1", b1_path, "SCX of the ball to remove")->required();
  gbm_cmd->add_option("--b2", b2_path, "SCX of the replacement ball")->required();
  gbm_cmd->add_option("--record", out_record);
  gbm_cmd->add_option("file", file);
  gbm_cmd->callback([&] {
    Complex c = load(file);
    SurgeryRecord rec;
    Complex out = gbm(c, load(b1_path), load(b2_path), &rec);
    maybe_record(rec, out_record);
    std::cout << write_scx(out);
  });

  // ---- decompose ----------------------------------------------------------
  std::string emit_prefix;
  auto* dec = app.add_subcommand("decompose", "structure step for a closed orientable surface");
  dec->add_option("--emit", emit_prefix, "write part complexes to <prefix>.N.scx");
  dec->add_option("file", file);
  dec->callback([&] {
    Complex c = load(file);
    DecompositionCase result = decompose_2manifold(c);
    auto emit = [&](const Complex& part, int idx) {
      if (emit_prefix.empty()) return;
      write_scx_file(part, emit_prefix + "." + std::to_string(idx) + ".scx");
    };
    json j;
    std::ostringstream text;
    if (std::holds_alternative<CaseStandardSphere>(result)) {
      text << "case=standard_sphere\n";
      j["case"] = "standard_sphere";
    } else if (auto* sum = std::get_if<CaseConnectedSum>(&result)) {
      text << "case=connected_sum\nseam=";
      for (size_t i = 0; i < sum->seam.size(); ++i) text << (i ? "," : "") << sum->seam[i];
      text << "\nf1=" << sum->x1.f_vector().to_string()
           << "\nf2=" << sum->x2.f_vector().to_string() << '\n';
      j = {{"case", "connected_sum"}, {"seam", sum->seam}};
      emit(sum->x1, 1);
      emit(sum->x2, 2);
    } else if (auto* ha = std::get_if<CaseHandleAddition>(&result)) {
      text << "case=handle_addition\nseam=";
      for (size_t i = 0; i < ha->seam.size(); ++i) text << (i ? "," : "") << ha->seam[i];
      text << "\nf=" << ha->y.f_vector().to_string() << '\n';
      j = {{"case", "handle_addition"}, {"seam", ha->seam}};
      emit(ha->y, 1);
    } else if (auto* red = std::get_if<CaseGbmReduction>(&result)) {
      text << "case=gbm_reduction\nvertex=" << red->u << "\nf="
           << red->y.f_vector().to_string() << '\n';
      j = {{"case", "gbm_reduction"}, {"vertex", red->u}};
      emit(red->y, 1);
      emit(red->ball, 2);
    }
    if (opt.json_out) std::cout << j.dump(2) << '\n';
    else std::cout << text.str();
  });

  // ---- stacked ------------------------------------------------------------
  auto* stacked = app.add_subcommand("stacked", "stacked-sphere tools");
  stacked->require_subcommand(1);
  auto* stacked_check = stacked->add_subcommand("check", "recognize a stacked sphere");
  stacked_check->add_option("file", file);
  stacked_check->callback([&] {
    StackedCertificate cert = is_stacked(load(file));
    if (opt.json_out) {
      std::cout << json{{"stacked", cert.stacked}, {"trace", cert.trace}}.dump(2) << '\n';
    } else {
      std::cout << "stacked=" << (cert.stacked ? "true" : "false") << '\n';
      if (!cert.trace.empty()) {
        std::cout << "trace=";
        for (size_t i = 0; i < cert.trace.size(); ++i)
          std::cout << (i ? "," : "") << cert.trace[i];
        std::cout << '\n';
      }
    }
    exit_code = cert.stacked ? 0 : 1;
  });
  auto* stacked_gen = stacked->add_subcommand("gen", "run a stacking script");
  std::string gen_script;
  int gen_d = 3, gen_n = 0;
  uint64_t gen_seed = 0;
  stacked_gen->add_option("--script", gen_script, "script file (see docs)");
  stacked_gen->add_option("--d", gen_d, "dimension for a random script");
  stacked_gen->add_option("--n", gen_n, "vertex count for a random script");
  stacked_gen->add_option("--seed", gen_seed, "seed for a random script");
  stacked_gen->callback([&] {
    StackScript script;
    if (!gen_script.empty()) {
      std::ifstream in(gen_script);
      if (!in) fail(ErrorCode::ParseError, "cannot open script '" + gen_script + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      script = StackScript::parse(buffer.str());
    } else if (gen_n > 0) {
      script = StackScript::random(gen_d, gen_n - gen_d - 2, gen_seed);
    } else {
      fail(ErrorCode::ParseError, "need --script or --d/--n/--seed");
    }
    std::cout << write_scx(generate_stacked(script));
  });
  auto* stacked_fv = stacked->add_subcommand("fvec", "closed-form face counts");
  stacked_fv->add_option("--d", gen_d)->required();
  stacked_fv->add_option("--n", gen_n)->required();
  stacked_fv->callback([&] {
    FaceVector f = stacked_fvector(gen_d, gen_n);
    if (opt.json_out) std::cout << json{{"f", f.counts}}.dump(2) << '\n';
    else std::cout << "f=" << f.to_string() << '\n';
  });

  // ---- rigidity -----------------------------------------------------------
  auto* rig = app.add_subcommand("rigidity", "exhaustive rigidity check");
  int rig_q = 0;
  SweepOptions sweep;
  sweep.workers = default_workers();
  rig->add_option("--q", rig_q, "rigidity parameter")->required();
  rig->add_option("--workers", sweep.workers, "worker threads (default from PMTOOL_WORKERS)");
  rig->add_flag("--serial", sweep.serial, "use the serial reference sweep");
  rig->add_option("--limit", sweep.max_vertices, "exhaustive-search vertex cap");
  rig->add_option("file", file);
  rig->callback([&] {
    RigidityReport r = is_minimally_q_rigid(load(file), rig_q, sweep);
    if (opt.json_out) std::cout << report_json(r).dump(2) << '\n';
    else std::cout << r.to_text();
    exit_code = r.verdict ? 0 : 1;
  });

  // ---- bounds -------------------------------------------------------------
  auto* lbt = app.add_subcommand("lbt", "lower-bound report");
  lbt->add_option("file", file);
  lbt->callback([&] {
    BoundReport r = lbt_check(load(file));
    if (opt.json_out) std::cout << report_json(r).dump(2) << '\n';
    else std::cout << r.to_text();
    exit_code = r.holds() ? 0 : 1;
  });

  auto* glbc_cmd = app.add_subcommand("glbc", "complete a k-stacked face vector");
  std::string prefix_csv;
  glbc_cmd->add_option("--d", opt_d)->required();
  glbc_cmd->add_option("--k", opt_k)->required();
  glbc_cmd->add_option("--prefix", prefix_csv, "f_0,...,f_{k-1}")->required();
  glbc_cmd->callback([&] {
    FaceVector f = glbc_fvector(opt_d, opt_k, split_ints(prefix_csv));
    if (opt.json_out) std::cout << json{{"f", f.counts}}.dump(2) << '\n';
    else std::cout << "f=" << f.to_string() << '\n';
  });

  auto* dehn = app.add_subcommand("dehn", "sphere-identity residuals");
  dehn->add_option("--d", opt_d)->required();
  dehn->add_option("vector", raw_vector, "comma-separated f_0,...,f_d")->required();
  dehn->callback([&] {
    auto residuals = dehn_sommerville_residuals(FaceVector(split_ints(raw_vector)), opt_d);
    bool all_zero = true;
    for (long long r : residuals)
      if (r) all_zero = false;
    if (opt.json_out) {
      std::cout << json{{"residuals", residuals}, {"all_zero", all_zero}}.dump(2) << '\n';
    } else {
      std::cout << "residuals=";
      for (size_t i = 0; i < residuals.size(); ++i) std::cout << (i ? "," : "") << residuals[i];
      std::cout << "\nall_zero=" << (all_zero ? "true" : "false") << '\n';
    }
    exit_code = all_zero ? 0 : 1;
  });

  // ---- catalog ------------------------------------------------------------
  auto* cat = app.add_subcommand("catalog", "named reference complexes");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "names and descriptions");
  cat_list->callback([&] {
    for (const CatalogEntry& e : catalog_entries())
      std::cout << e.name << "\t" << e.description << '\n';
  });
  auto* cat_emit = cat->add_subcommand("emit", "write a catalog complex");
  std::string cat_name;
  cat_emit->add_option("name", cat_name)->required();
  cat_emit->callback([&] {
    const CatalogEntry* entry = catalog_find(cat_name);
    if (!entry) fail(ErrorCode::ParseError, "unknown catalog entry '" + cat_name + "'");
    std::cout << write_scx(entry->build());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or requested help
    return code == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
