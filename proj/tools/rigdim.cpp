// rigdim: command-line front end. JSON on stdout, diagnostics on stderr.
//
// Exit codes: 0 success, 1 other errors, 2 parse/build errors,
// 3 unsupported input, 4 inconclusive or inexact under --strict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rigdim/errors.hpp"
#include "rigdim/io.hpp"

using namespace rigdim;

namespace {

enum Exit { kOk = 0, kError = 1, kParse = 2, kUnsupported = 3, kInconclusive = 4 };

struct Globals {
  std::size_t cutoff = 0;  // 0: take the file option, else the default
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool strict = false;
};

/// Walks the output for values that are not exactly determined.
bool all_exact(const Json& j) {
  if (j.is_object()) {
    if (j.contains("status") && j["status"] == "at_least") return false;
    for (const auto& [k, v] : j.items())
      if (k != "candidates" && !all_exact(v)) return false;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (!all_exact(v)) return false;
  }
  return true;
}

Options options_for(const AlgebraFile& f, const Globals& g) {
  Options o;
  o.cutoff = g.cutoff ? g.cutoff : f.cutoff.value_or(kDefaultCutoff);
  o.seed = g.seed_set ? g.seed : f.seed.value_or(kDefaultSeed);
  if (o.cutoff < 1) throw Error("cutoff must be at least 1");
  return o;
}

Json dims_json(const Module& m) { return Json(m.dims()); }

int emit(const Json& out, const Globals& g, int code = kOk) {
  std::cout << out.dump(2) << "\n";
  if (code != kOk) return code;
  if (g.strict && !all_exact(out)) {
    std::cerr << "strict: result is not exact\n";
    return kInconclusive;
  }
  return kOk;
}

template <class F>
int guarded(const Globals& g, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotAdmissible& e) {
    std::cerr << "not admissible: " << e.what() << "\n";
    return kParse;
  } catch (const NotHomogeneous& e) {
    std::cerr << "not homogeneous: " << e.what() << "\n";
    return kParse;
  } catch (const NotFiniteDimensional& e) {
    std::cerr << "not finite-dimensional: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidRepresentation& e) {
    std::cerr << "invalid module: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedCharacteristic& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    Json out = Json::object();
    out["status"] = "inconclusive";
    out["message"] = e.what();
    std::cout << out.dump(2) << "\n";
    return g.strict ? kInconclusive : kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological invariants and rigidity dimension of quiver algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cutoff", g.cutoff, "Resolution cutoff (default 30)")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", g.seed, "Seed for isomorphism searches (default 0)");
  app.add_flag("--strict", g.strict, "Exit 4 on inconclusive or non-exact results");

  std::string alg_path, module_path, from_path, to_path, indecs_path, out_path;
  std::size_t degree = 0, n = 0;

  auto* inv = app.add_subcommand("invariants", "gldim, domdim, idim; nodes and rho when self-injective");
  auto* cf = app.add_subcommand("cf", "rigidity dimension report");
  auto* evd = app.add_subcommand("evd", "rigidity degree of a module");
  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N)");
  auto* mueller = app.add_subcommand("mueller", "evd + 2 against domdim End(M)");
  auto* maxortho = app.add_subcommand("maxortho", "maximal n-orthogonality of a module");
  auto* indecs = app.add_subcommand("indecs", "enumerate indecomposables");
  for (auto* sc : {inv, cf, evd, ext, mueller, maxortho, indecs})
    sc->add_option("algebra", alg_path, "Algebra file")->required();
  evd->add_option("--module", module_path, "Module file")->required();
  ext->add_option("--from", from_path, "Module file M")->required();
  ext->add_option("--to", to_path, "Module file N")->required();
  ext->add_option("--degree", degree, "Degree i")->required();
  mueller->add_option("--module", module_path, "Module file")->required();
  maxortho->add_option("--module", module_path, "Module file")->required();
  maxortho->add_option("--n", n, "Orthogonality level")->required()->check(CLI::PositiveNumber);
  maxortho->add_option("--indecs", indecs_path, "Indecomposables file (needs complete = true)");
  cf->add_option("--indecs", indecs_path, "Indecomposables file instead of the enumeration");
  indecs->add_option("-o", out_path, "Write the modules to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }
  g.seed_set = seed_opt->count() > 0;

  return guarded(g, [&]() -> int {
    AlgebraFile af = read_algebra_file(alg_path);
    const AlgebraPtr& alg = af.algebra;
    const Options opt = options_for(af, g);
    auto load = [&](const std::string& p) { return read_module_file(p, alg); };

    if (*inv) {
      HomologicalDims d = homological_dims(alg, opt);
      Json out = Json::object();
      out["dim"] = alg->dim();
      Json dj = to_json(d);
      for (const auto& [k, v] : dj.items()) out[k] = v;
      if (d.selfinjective) {
        NodeData nd = nodes_and_rho(alg, opt);
        Json nodes = Json::array();
        for (const auto& s : nd.nodes) nodes.push_back(s.name());
        out["nodes"] = nodes;
        out["rho"] = nd.rho ? to_json(*nd.rho) : Json(nullptr);
      }
      return emit(out, g);
    }
    if (*cf) {
      std::optional<IndecList> list;
      if (!indecs_path.empty()) {
        ModuleFile mf = load(indecs_path);
        list = IndecList{mf.summands, mf.complete.value_or(false)};
      }
      RigidityReport r = rigidity_dimension(alg, opt, list);
      Json out = to_json(r);
      if (!list && !alg->is_nakayama() && !alg->is_semisimple()) {
        std::cerr << "unsupported: automatic enumeration is incomplete for non-Nakayama algebras\n";
        return emit(out, g, kUnsupported);
      }
      return emit(out, g);
    }
    if (*evd) {
      ModuleFile mf = load(module_path);
      Json out = Json::object();
      out["module"] = mf.name;
      out["dims"] = dims_json(direct_sum(mf.summands).sum);
      out["evd"] = to_json(rigidity_degree(direct_sum(mf.summands).sum, opt));
      return emit(out, g);
    }
    if (*ext) {
      ModuleFile m = load(from_path), nn = load(to_path);
      Json out = Json::object();
      out["from"] = m.name;
      out["to"] = nn.name;
      out["degree"] = degree;
      out["dim"] = ext_dim(direct_sum(m.summands).sum, direct_sum(nn.summands).sum, degree);
      return emit(out, g);
    }
    if (*mueller) {
      ModuleFile mf = load(module_path);
      Json out = Json::object();
      out["module"] = mf.name;
      Json mj = to_json(mueller_check(basic_part(mf.summands, opt), opt));
      for (const auto& [k, v] : mj.items()) out[k] = v;
      return emit(out, g);
    }
    if (*maxortho) {
      ModuleFile mf = load(module_path);
      IndecList list;
      if (indecs_path.empty()) {
        list = enumerate_indecomposables(alg);
      } else {
        ModuleFile lf = load(indecs_path);
        list = IndecList{lf.summands, lf.complete.value_or(false)};
      }
      Json out = Json::object();
      out["module"] = mf.name;
      out["n"] = n;
      out["maximal_orthogonal"] = max_orthogonal_check(mf.summands, n, list, opt);
      return emit(out, g);
    }
    if (*indecs) {
      IndecList list = enumerate_indecomposables(alg);
      Json out = Json::object();
      out["complete"] = list.complete;
      Json mods = Json::array();
      for (const auto& m : list.modules) {
        Json mj = Json::object();
        mj["name"] = m.name();
        mj["dims"] = dims_json(m);
        mods.push_back(mj);
      }
      out["modules"] = mods;
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw Error("cannot write '" + out_path + "'");
        f << write_module_file(list.modules, list.complete);
      }
      return emit(out, g);
    }
    return kError;
  });
}
