#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "glat/classify.hpp"
#include "glat/json_io.hpp"

namespace {

using glat::json;

struct CommonOpts {
  std::string group_path;
  std::string catalog_key;
  std::uint64_t seed = 0;
  std::uint64_t budget_elements = 1000000;
  int shift_depth = 4;
  int orbit_budget = 3;
  std::uint64_t trials = 2000;
  std::string coeffs = "0..1";
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_group = true) {
  if (needs_group) {
    cmd->add_option("--group", o.group_path, "path to a group JSON file");
    cmd->add_option("--catalog", o.catalog_key, "catalog key");
  }
  cmd->add_option("--seed", o.seed, "PRNG seed (default 0)");
  cmd->add_option("--budget-elements", o.budget_elements,
                  "group order cap (default 1000000)");
  cmd->add_option("--shift-depth", o.shift_depth,
                  "dimension shift cap for tate (default 4)");
  cmd->add_option("--orbit-budget", o.orbit_budget, "orbit budget for Method III");
  cmd->add_option("--trials", o.trials, "random unimodular-search trials");
  cmd->add_option("--coeffs", o.coeffs, "coefficient range a..b for the search");
  cmd->add_flag("--json", [](std::int64_t) {}, "JSON report output (default)");
  cmd->add_flag("--quiet", o.quiet, "suppress the report, exit code only");
}

std::vector<long> parse_coeffs(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw glat::ParseError("coeffs", "--coeffs expects the form a..b");
  long a = std::stol(s.substr(0, dots));
  long b = std::stol(s.substr(dots + 2));
  if (b < a) throw glat::ParseError("coeffs", "--coeffs range is empty");
  std::vector<long> v;
  for (long x = a; x <= b; ++x) v.push_back(x);
  return v;
}

struct Loaded {
  glat::MatrixGroup group;
  std::optional<glat::PermGroupSpec> spec;
  std::string input_digest;
};

Loaded load_group(const CommonOpts& o) {
  if (o.group_path.empty() == o.catalog_key.empty())
    throw glat::ParseError("group", "exactly one of --group or --catalog is required");
  if (!o.catalog_key.empty()) {
    const glat::CatalogEntry& e = glat::catalog_get(o.catalog_key);
    json canonical = {{"catalog", o.catalog_key}};
    if (std::holds_alternative<glat::PermGroupSpec>(e)) {
      const auto& s = std::get<glat::PermGroupSpec>(e);
      return Loaded{glat::norm1_torus_j(s), s, glat::digest(canonical)};
    }
    return Loaded{std::get<glat::MatrixGroup>(e), std::nullopt, glat::digest(canonical)};
  }
  auto v = glat::read_group_file(o.group_path);
  if (std::holds_alternative<glat::PermGroupSpec>(v)) {
    const auto& s = std::get<glat::PermGroupSpec>(v);
    return Loaded{glat::norm1_torus_j(s), s, glat::digest(glat::perm_spec_to_json(s))};
  }
  const auto& g = std::get<glat::MatrixGroup>(v);
  return Loaded{g, std::nullopt, glat::digest(glat::group_to_json(g))};
}

int emit(const CommonOpts& o, const std::string& command,
         const std::string& input_digest, json payload, int exit_code,
         std::chrono::steady_clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  json report = {{"command", command},
                 {"input_digest", input_digest},
                 {"seed", o.seed},
                 {"budgets",
                  {{"elements", o.budget_elements},
                   {"shift_depth", o.shift_depth},
                   {"orbit_budget", o.orbit_budget},
                   {"trials", o.trials},
                   {"coeffs", o.coeffs}}},
                 {"payload", std::move(payload)},
                 {"wall_time_ms", ms}};
  if (!o.quiet) std::cout << report.dump(2) << "\n";
  return exit_code;
}

glat::Combo parse_combo(const std::string& s) {
  glat::Combo c;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) c.emplace_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return c;
}

json combos_json(const std::vector<glat::Combo>& l) {
  json a = json::array();
  for (const auto& c : l) {
    json row = json::array();
    for (const auto& x : c) {
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    a.push_back(std::move(row));
  }
  return a;
}

json divisors_json(const glat::TateGroup& t) {
  json a = json::array();
  for (const auto& d : t) {
    if (d.fits_slong_p())
      a.push_back(d.get_si());
    else
      a.push_back(d.get_str());
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with G-lattices: Tate cohomology, flabby "
               "resolutions, rationality classification"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string sub;
  int degree = 0;
  std::string distinguished = "F";
  std::string c1s, c2s, p_path, base_path, check_name = "stablyperm", key;

  auto* c_classify = app.add_subcommand("classify", "run the classification flowchart");
  add_common(c_classify, o);

  auto* c_coh = app.add_subcommand("cohomology", "Tate cohomology divisors");
  add_common(c_coh, o);
  c_coh->add_option("--degree", degree, "cohomology degree n")->required();

  auto* c_res = app.add_subcommand("resolve", "flabby resolution 0->M->P->F->0");
  add_common(c_res, o);

  auto* c_inv = app.add_subcommand("invertible", "is the flabby class invertible");
  add_common(c_inv, o);

  auto* c_pos = app.add_subcommand("possibility", "stably-permutation necessary conditions");
  add_common(c_pos, o);
  c_pos->add_option("--distinguished", distinguished, "F (default) or M");

  auto* c_sp = app.add_subcommand("stablyperm", "Method II intertwiner search");
  add_common(c_sp, o);
  c_sp->add_option("--distinguished", distinguished, "F (default) or M");
  c_sp->add_option("--c1", c1s, "left combo, comma separated")->required();
  c_sp->add_option("--c2", c2s, "right combo, comma separated")->required();
  c_sp->add_option("--base", base_path, "resolution base rows (matrix JSON)");

  auto* c_sub = app.add_subcommand("subgroups", "conjugacy classes of subgroups");
  add_common(c_sub, o);

  auto* c_n1 = app.add_subcommand("norm1", "Chevalley module of a norm-one torus");
  add_common(c_n1, o);

  auto* c_cat = app.add_subcommand("catalog", "list or fetch catalog entries");
  add_common(c_cat, o, false);
  c_cat->add_option("--key", key, "catalog key to fetch");

  auto* c_ver = app.add_subcommand("verify", "re-check a certificate");
  add_common(c_ver, o);
  c_ver->add_option("--check", check_name, "certificate kind (stablyperm)");
  c_ver->add_option("--distinguished", distinguished, "F (default) or M");
  c_ver->add_option("--c1", c1s, "left combo");
  c_ver->add_option("--c2", c2s, "right combo");
  c_ver->add_option("--P", p_path, "path to the certificate matrix JSON");
  c_ver->add_option("--base", base_path, "resolution base rows (matrix JSON)");

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();

  try {
    glat::budget().max_elements = o.budget_elements;
    glat::budget().shift_depth = o.shift_depth;

    if (c_cat->parsed()) {
      json payload;
      if (key.empty()) {
        payload["keys"] = glat::catalog_keys();
      } else {
        const glat::CatalogEntry& e = glat::catalog_get(key);
        payload["key"] = key;
        if (std::holds_alternative<glat::MatrixGroup>(e))
          payload["entry"] = glat::group_to_json(std::get<glat::MatrixGroup>(e));
        else
          payload["entry"] = glat::perm_spec_to_json(std::get<glat::PermGroupSpec>(e));
      }
      return emit(o, "catalog", glat::digest(json{{"key", key}}), payload, 0, t0);
    }

    Loaded in = load_group(o);
    const glat::MatrixGroup& g = in.group;

    if (c_classify->parsed()) {
      glat::ClassifyOptions copt;
      copt.seed = o.seed;
      copt.trials = o.trials;
      copt.orbit_budget = o.orbit_budget;
      glat::Classification cl = glat::classify(g, copt);
      json payload = {{"verdict", glat::verdict_name(cl.verdict)},
                      {"evidence", cl.evidence}};
      int code = cl.verdict == glat::Verdict::undecided ? 2 : 0;
      return emit(o, "classify", in.input_digest, payload, code, t0);
    }
    if (c_coh->parsed()) {
      glat::TateGroup t = glat::tate(g, degree);
      json payload = {{"degree", degree}, {"divisors", divisors_json(t)}};
      return emit(o, "cohomology", in.input_digest, payload, 0, t0);
    }
    if (c_res->parsed()) {
      glat::FlabbyResolutionResult r = glat::flabby_resolution(g);
      json fp = json::array(), pp = json::array();
      for (const auto& m : r.action_f.gens()) fp.push_back(glat::matrix_to_json(m));
      for (const auto& m : r.action_p.gens()) pp.push_back(glat::matrix_to_json(m));
      json payload = {{"injection", glat::matrix_to_json(r.injection)},
                      {"surjection", glat::matrix_to_json(r.surjection)},
                      {"action_p", pp},
                      {"action_f", fp},
                      {"rank_f", r.action_f.rank()},
                      {"f_is_flabby",
                       r.action_f.rank() == 0 ? true : glat::is_flabby(r.action_f)}};
      return emit(o, "resolve", in.input_digest, payload, 0, t0);
    }
    if (c_inv->parsed()) {
      bool inv = glat::is_invertible_f(g);
      return emit(o, "invertible", in.input_digest, json{{"invertible", inv}}, 0, t0);
    }
    if (c_pos->parsed()) {
      auto which = distinguished == "M" ? glat::Distinguished::M : glat::Distinguished::F;
      auto basis = glat::possibility_of_stably_permutation(g, which);
      glat::Int bg = 0;
      for (const auto& c : basis) bg = glat::gcd(bg, c.back());
      json payload = {{"distinguished", distinguished},
                      {"basis", combos_json(basis)},
                      {"b1_gcd", bg.get_str()}};
      return emit(o, "possibility", in.input_digest, payload, 0, t0);
    }
    if (c_sp->parsed()) {
      auto which = distinguished == "M" ? glat::Distinguished::M : glat::Distinguished::F;
    auto make_context = [&](const glat::MatrixGroup& grp,
                            glat::Distinguished which) {
      if (base_path.empty() || which == glat::Distinguished::M)
        return glat::block_context(grp, which);
      glat::IntMatrix bm = glat::read_matrix_file(base_path);
      std::vector<glat::Vec> base;
      for (int i = 0; i < bm.rows(); ++i) base.push_back(bm.row(i));
      glat::DualResolution dr = glat::dual_resolution(grp, base);
      return glat::block_context_from(grp, dr);
    };
      glat::BlockContext ctx = make_context(g, which);
      glat::Combo c1 = parse_combo(c1s), c2 = parse_combo(c2s);
      auto bp = glat::stably_permutation_check_p(ctx, c1, c2);
      glat::SearchStrategy s;
      s.coeff_set = parse_coeffs(o.coeffs);
      s.trials = o.trials;
      s.seed = o.seed;
      if (int(bp.size()) <= 16) s.exhaustive = true;
      auto hit = glat::unimodular_search(bp, s);
      json payload = {{"distinguished", distinguished},
                      {"intertwiner_dim", bp.size()},
                      {"found", hit.has_value()}};
      if (hit) {
        payload["P"] = glat::matrix_to_json(hit->matrix);
        payload["trial"] = hit->trial_index;
        payload["verified"] = glat::stably_permutation_check_mat(ctx, c1, c2, hit->matrix);
      }
      return emit(o, "stablyperm", in.input_digest, payload, hit ? 0 : 2, t0);
    }
    if (c_sub->parsed()) {
      glat::SubgroupClassList cl = glat::conjugacy_classes_subgroups(g);
      json classes = json::array();
      for (const auto& c : cl.classes) {
        json gens = json::array();
        for (const auto& m : c.group.gens()) gens.push_back(glat::matrix_to_json(m));
        classes.push_back({{"order", c.subgroup_order},
                           {"class_size", c.class_size},
                           {"generators", gens}});
      }
      json payload = {{"count", cl.classes.size()}, {"classes", classes}};
      return emit(o, "subgroups", in.input_digest, payload, 0, t0);
    }
    if (c_n1->parsed()) {
      json payload = {{"group", glat::group_to_json(g)}, {"order", g.order()}};
      return emit(o, "norm1", in.input_digest, payload, 0, t0);
    }
    if (c_ver->parsed()) {
      if (check_name != "stablyperm")
        throw glat::ParseError("check", "unknown certificate kind '" + check_name + "'");
      auto which = distinguished == "M" ? glat::Distinguished::M : glat::Distinguished::F;
    auto make_context = [&](const glat::MatrixGroup& grp,
                            glat::Distinguished which) {
      if (base_path.empty() || which == glat::Distinguished::M)
        return glat::block_context(grp, which);
      glat::IntMatrix bm = glat::read_matrix_file(base_path);
      std::vector<glat::Vec> base;
      for (int i = 0; i < bm.rows(); ++i) base.push_back(bm.row(i));
      glat::DualResolution dr = glat::dual_resolution(grp, base);
      return glat::block_context_from(grp, dr);
    };
      glat::BlockContext ctx = make_context(g, which);
      glat::IntMatrix p = glat::read_matrix_file(p_path);
      bool ok = glat::stably_permutation_check_mat(ctx, parse_combo(c1s),
                                                   parse_combo(c2s), p);
      return emit(o, "verify", in.input_digest, json{{"verified", ok}}, 0, t0);
    }
  } catch (const glat::ParseError& e) {
    std::cerr << "invalid input (field '" << e.field << "'): " << e.what() << "\n";
    return 3;
  } catch (const glat::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const glat::DepthExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const glat::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
