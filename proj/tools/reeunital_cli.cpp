// Command-line front end: builds the two unital models, verifies the
// design axioms and explicit configurations, and runs the exhaustive
// searches. Exit codes: 0 pass, 1 verification failure, 2 usage error,
// 3 undecided within budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "reeunital/incidence.hpp"
#include "reeunital/rt_unital.hpp"
#include "reeunital/unital_s.hpp"

namespace ru = reeunital;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  long long q = 3;
  std::string out;
  std::string format = "text";
  std::uint64_t budget = 1'000'000'000ULL;
  int workers = 1;
};

int n_for_q(long long q) {
  long long p = 3;
  for (int n = 1; n <= 9; n += 2, p *= 9)
    if (p == q) return n;
  return -1;
}

// Writes to the output path when given, otherwise to stdout.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

void emit(const Options& opt, const json& doc,
          const std::function<void(std::ostream&)>& text) {
  Sink sink(opt.out);
  if (opt.format == "json") {
    json j = doc;
    j["schema_version"] = kSchemaVersion;
    sink.os() << j.dump(2) << "\n";
  } else {
    text(sink.os());
  }
}

json incidence_json(const ru::IncidenceStructure& s) {
  json j;
  j["v"] = s.v;
  j["b"] = s.b();
  j["blocks"] = s.blocks;
  return j;
}

ru::IncidenceStructure read_incidence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return ru::read_incidence(in);
}

int cmd_build_sl28(const Options& opt) {
  ru::UnitalS u = ru::build_unital_s();
  ru::IncidenceStructure inc = u.to_incidence();
  emit(opt, incidence_json(inc), [&](std::ostream& os) {
    ru::write_incidence(os, inc,
                        {"unital from the Sylow 3-subgroups of SL(2,8)"});
  });
  return 0;
}

int cmd_build_rt(const Options& opt) {
  if (opt.q != 3 && opt.q != 27) {
    std::cerr << "build-rt: q must be 3 or 27\n";
    return 2;
  }
  if (opt.q == 27 && opt.out.empty()) {
    std::cerr << "build-rt: --out required for q=27 (~512k blocks)\n";
    return 2;
  }
  ru::F3nCtx ctx(n_for_q(opt.q));
  ru::RTUnital rt = ru::build_rt(ctx);
  ru::IncidenceStructure inc = rt.to_incidence();
  json j = incidence_json(inc);
  j["field"] = ctx.header();
  emit(opt, j, [&](std::ostream& os) {
    ru::write_incidence(os, inc, {ctx.header()});
  });
  return 0;
}

int cmd_verify(const Options& opt, const std::string& in) {
  ru::IncidenceStructure s = read_incidence_file(in);
  ru::DesignCheck chk = ru::verify_2design(s);
  json j;
  j["ok"] = chk.ok;
  if (chk.ok)
    j["params"] = {{"v", chk.params.v}, {"b", chk.params.b},
                   {"r", chk.params.r}, {"k", chk.params.k},
                   {"lambda", chk.params.lambda}};
  else
    j["failure"] = chk.failure;
  emit(opt, j, [&](std::ostream& os) {
    if (chk.ok)
      os << "2-design (" << chk.params.v << ", " << chk.params.b << ", "
         << chk.params.r << ", " << chk.params.k << ", " << chk.params.lambda
         << ")\n";
    else
      os << "FAIL: " << chk.failure << "\n";
  });
  return chk.ok ? 0 : 1;
}

int cmd_catalog(const Options& opt) {
  ru::UnitalS u = ru::build_unital_s();
  const ru::NamedCatalog& c = ru::named_catalog();
  ru::CatalogReport rep = ru::verify_explicit_catalog(u);

  std::vector<std::pair<std::string, const ru::Mat2*>> named = {
      {"S", &c.S}, {"T", &c.T}, {"T^S", &c.TS}, {"A", &c.A}, {"D", &c.D},
      {"Y", &c.Y}, {"Y^delta", &c.Ydelta}, {"Y^delta2", &c.Ydelta2},
      {"Y^S", &c.YS}, {"Y^Sdelta", &c.YSdelta}, {"Y^Sdelta2", &c.YSdelta2},
      {"G", &c.G}, {"G^delta", &c.Gdelta}, {"G^delta2", &c.Gdelta2},
      {"E", &c.E}, {"E^delta", &c.Edelta}, {"E^delta2", &c.Edelta2},
      {"E^S", &c.ES}, {"E^Sdelta", &c.ESdelta}, {"E^Sdelta2", &c.ESdelta2},
      {"M", &c.M}, {"M^delta", &c.Mdelta}, {"M^delta2", &c.Mdelta2},
      {"I", &c.I}, {"I^delta", &c.Idelta}, {"I^delta2", &c.Idelta2},
      {"I^S", &c.IS}, {"I^Sdelta", &c.ISdelta}, {"I^Sdelta2", &c.ISdelta2},
      {"F", &c.F}, {"F^delta", &c.Fdelta}, {"F^delta2", &c.Fdelta2},
      {"F^S", &c.FS}, {"F^Sdelta", &c.FSdelta}, {"F^Sdelta2", &c.FSdelta2},
      {"DveeF", &c.DveeF}, {"DveeF^delta", &c.DveeFdelta}};

  json j;
  j["matrices"] = json::object();
  for (const auto& [name, m] : named) j["matrices"][name] = m->str();
  j["checks"] = json::array();
  for (const auto& [name, pass] : rep.items)
    j["checks"].push_back({{"name", name}, {"pass", pass}});
  j["ok"] = rep.all_pass;

  emit(opt, j, [&](std::ostream& os) {
    for (const auto& [name, m] : named)
      os << name << " = " << m->str() << "\n";
    os << "\n";
    for (const auto& [name, pass] : rep.items)
      os << (pass ? "PASS" : "FAIL") << "  " << name << "\n";
  });
  return rep.all_pass ? 0 : 1;
}

int cmd_find_dual_kn(const Options& opt, const std::string& in, int n) {
  ru::IncidenceStructure s = read_incidence_file(in);
  ru::DualKnResult res = ru::find_dual_kn(s, n, opt.budget);
  json j;
  j["nodes"] = res.nodes;
  const char* status = res.status == ru::SearchStatus::Found ? "found"
                       : res.status == ru::SearchStatus::NoneExists
                           ? "none-exists"
                           : "undecided";
  j["status"] = status;
  if (res.witness) {
    j["blocks"] = res.witness->blocks;
    j["points"] = res.witness->points;
  }
  emit(opt, j, [&](std::ostream& os) {
    os << "status: " << status << " (nodes: " << res.nodes << ")\n";
    if (res.witness) {
      os << "blocks:";
      for (int b : res.witness->blocks) os << ' ' << b;
      os << "\npoints:";
      for (int p : res.witness->points) os << ' ' << p;
      os << "\n";
    }
  });
  switch (res.status) {
    case ru::SearchStatus::Found: return 0;
    case ru::SearchStatus::NoneExists: return 1;
    default: return 3;
  }
}

int cmd_iso(const Options& opt, const std::string& a, const std::string& b) {
  ru::IncidenceStructure s1 = read_incidence_file(a);
  ru::IncidenceStructure s2 = read_incidence_file(b);
  auto bij = ru::isomorphism_search(s1, s2);
  json j;
  j["isomorphic"] = static_cast<bool>(bij);
  if (bij) j["image"] = bij->image;
  emit(opt, j, [&](std::ostream& os) {
    if (!bij) {
      os << "not isomorphic\n";
      return;
    }
    os << "isomorphic; point map:\n";
    for (std::size_t p = 0; p < bij->image.size(); ++p)
      os << p << " -> " << bij->image[p] << "\n";
  });
  return bij ? 0 : 1;
}

int cmd_search_intersections(const Options& opt) {
  int n = n_for_q(opt.q);
  if (n < 0) {
    std::cerr << "search-intersections: q must be in {3, 27, 243, 2187, 19683}\n";
    return 2;
  }
  ru::F3nCtx ctx(n);
  auto sols = ru::intersection_search(ctx, opt.workers);
  json j;
  j["field"] = ctx.header();
  j["solutions"] = json::array();
  for (const auto& s : sols)
    j["solutions"].push_back(
        {{"x", s.x.str()}, {"s", s.s.str()}, {"m", s.m.str()}});
  emit(opt, j, [&](std::ostream& os) {
    for (const auto& s : sols)
      os << "x=" << s.x.str() << " s=" << s.s.str() << " m=" << s.m.str()
         << "\n";
  });
  return 0;
}

int cmd_pearls(const Options& opt) {
  if (opt.q != 3 && opt.q != 27) {
    std::cerr << "pearls: q must be 3 or 27\n";
    return 2;
  }
  ru::F3nCtx ctx(n_for_q(opt.q));
  ru::PearlChain chain = ru::string_of_pearls(ctx);
  json j;
  j["field"] = ctx.header();
  j["configurations"] = chain.configs.size();
  j["union_points"] = chain.union_points;
  j["union_blocks"] = chain.union_blocks;
  emit(opt, j, [&](std::ostream& os) {
    os << chain.configs.size() << " configurations; union: "
       << chain.union_points << " points, " << chain.union_blocks
       << " blocks\n";
  });
  return 0;
}

int cmd_structure_checks(const Options& opt) {
  if (opt.q != 3 && opt.q != 27) {
    std::cerr << "structure-checks: q must be 3 or 27\n";
    return 2;
  }
  ru::F3nCtx ctx(n_for_q(opt.q));
  ru::StructureReport rep = ru::structural_checks(ctx);
  json j;
  j["field"] = ctx.header();
  j["checks"] = json::array();
  for (const auto& [name, pass] : rep.items)
    j["checks"].push_back({{"name", name}, {"pass", pass}});
  j["ok"] = rep.all_pass;
  emit(opt, j, [&](std::ostream& os) {
    for (const auto& [name, pass] : rep.items)
      os << (pass ? "PASS" : "FAIL") << "  " << name << "\n";
  });
  return rep.all_pass ? 0 : 1;
}

int cmd_omega_fix(const Options& opt) {
  if (opt.q != 3 && opt.q != 27) {
    std::cerr << "omega-fix: q must be 3 or 27\n";
    return 2;
  }
  ru::F3nCtx ctx(n_for_q(opt.q));
  auto fixed = ru::omega_fix(ctx);
  json j;
  j["field"] = ctx.header();
  j["count"] = fixed.size();
  j["points"] = json::array();
  for (const auto& p : fixed) j["points"].push_back(p.str());
  emit(opt, j, [&](std::ostream& os) {
    for (const auto& p : fixed) os << p.str() << "\n";
    os << "count: " << fixed.size() << "\n";
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ree-Tits unital constructions and verifications"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("REE_UNITAL_WORKERS"))
    opt.workers = std::max(1, std::atoi(env));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "output path (default: stdout)");
    sub->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--workers", opt.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
  };

  auto* sc_sl28 = app.add_subcommand("build-sl28", "emit the SL(2,8) unital");
  add_common(sc_sl28);

  auto* sc_rt = app.add_subcommand("build-rt", "emit RT(q)");
  sc_rt->add_option("--q", opt.q, "field size")->required();
  add_common(sc_rt);

  std::string in_path, a_path, b_path;
  auto* sc_verify = app.add_subcommand("verify", "check the 2-design axioms");
  sc_verify->add_option("--in", in_path, "incidence file")->required();
  add_common(sc_verify);

  auto* sc_catalog =
      app.add_subcommand("catalog", "named matrices and explicit checks");
  sc_catalog->alias("dump-catalog");
  add_common(sc_catalog);

  int kn = 5;
  auto* sc_kn = app.add_subcommand("find-dual-kn", "search for a dual K_n");
  sc_kn->add_option("--n", kn, "clique size")->required();
  sc_kn->add_option("--in", in_path, "incidence file")->required();
  sc_kn->add_option("--budget", opt.budget, "backtrack node budget");
  add_common(sc_kn);

  auto* sc_iso = app.add_subcommand("iso", "isomorphism search");
  sc_iso->add_option("--a", a_path, "first incidence file")->required();
  sc_iso->add_option("--b", b_path, "second incidence file")->required();
  add_common(sc_iso);

  auto* sc_search = app.add_subcommand("search-intersections",
                                       "block-intersection equation scan");
  sc_search->add_option("--q", opt.q, "field size")->required();
  add_common(sc_search);

  auto* sc_pearls = app.add_subcommand("pearls", "string of pearls");
  sc_pearls->add_option("--q", opt.q, "field size")->required();
  add_common(sc_pearls);

  auto* sc_struct =
      app.add_subcommand("structure-checks", "root group structure report");
  sc_struct->add_option("--q", opt.q, "field size")->required();
  add_common(sc_struct);

  auto* sc_ofix = app.add_subcommand("omega-fix", "fixed points of omega");
  sc_ofix->add_option("--q", opt.q, "field size")->required();
  add_common(sc_ofix);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sc_sl28->parsed()) return cmd_build_sl28(opt);
    if (sc_rt->parsed()) return cmd_build_rt(opt);
    if (sc_verify->parsed()) return cmd_verify(opt, in_path);
    if (sc_catalog->parsed()) return cmd_catalog(opt);
    if (sc_kn->parsed()) return cmd_find_dual_kn(opt, in_path, kn);
    if (sc_iso->parsed()) return cmd_iso(opt, a_path, b_path);
    if (sc_search->parsed()) return cmd_search_intersections(opt);
    if (sc_pearls->parsed()) return cmd_pearls(opt);
    if (sc_struct->parsed()) return cmd_structure_checks(opt);
    if (sc_ofix->parsed()) return cmd_omega_fix(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
