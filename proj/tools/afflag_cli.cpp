// Command line interface to the affine Schubert calculus library: covers,
// strong strips, coproducts, structure constants, cap/Pieri operators,
// strong/weak Schur functions and the sweep verifications.
//
// Exit codes: 0 success (and verification passed), 1 verification failure,
// 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "afflag/element_io.hpp"
#include "afflag/json_io.hpp"
#include "afflag/nilhecke.hpp"
#include "afflag/strong_order.hpp"
#include "afflag/symfunc.hpp"
#include "json.hpp"

namespace {

using namespace afflag;
using ojson = nlohmann::ordered_json;

struct CommonOpts {
  int n = 0;
  bool json = false;
  std::string cache_dir;
  bool no_cache = false;
};

void add_rank(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-n,--n,--rank", opts.n, "rank of the affine symmetric group (n >= 2)")
      ->required();
}

void add_json(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--json", opts.json, "emit a single JSON document on stdout");
}

void add_cache(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--cache-dir", opts.cache_dir,
                  "coproduct cache directory (default: AFFLAG_CACHE_DIR, else the user cache home)");
  cmd->add_flag("--no-cache", opts.no_cache, "disable the on-disk coproduct cache");
}

std::unique_ptr<CoproductCache> make_cache(const CommonOpts& opts) {
  if (opts.no_cache) return std::make_unique<CoproductCache>();
  if (!opts.cache_dir.empty())
    return std::make_unique<CoproductCache>(std::filesystem::path(opts.cache_dir));
  return std::make_unique<CoproductCache>(CoproductCache::default_directory());
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

int cmd_covers(const CommonOpts& opts, const std::string& w_text, bool marked) {
  const AffinePerm w = parse_element(opts.n, w_text);
  if (marked) {
    const auto covers = marked_lower_covers(w);
    if (opts.json) {
      std::cout << marked_covers_json(covers);
    } else {
      for (const MarkedCover& c : covers)
        std::cout << "outside=" << window_string(c.outside) << " i=" << c.i << " j=" << c.j
                  << " a=" << c.a << "\n";
      std::cout << "total " << covers.size() << "\n";
    }
  } else {
    const auto covers = lower_covers(w);
    if (opts.json) {
      std::cout << covers_json(covers);
    } else {
      for (const auto& [v, t] : covers)
        std::cout << "v=" << window_string(v) << " t=" << reflection_string(t) << "\n";
      std::cout << "total " << covers.size() << "\n";
    }
  }
  return 0;
}

int cmd_strips(const CommonOpts& opts, const std::string& w_text, int size) {
  const AffinePerm w = parse_element(opts.n, w_text);
  const auto strips = strong_strips(w, size);
  if (opts.json) {
    std::cout << strips_json(strips);
  } else {
    for (const StrongStrip& s : strips) {
      std::cout << window_string(s.inside());
      for (const MarkedCover& c : s.covers)
        std::cout << " ->(" << c.a << ") " << window_string(c.outside);
      std::cout << "\n";
    }
    std::cout << "total " << strips.size() << "\n";
  }
  return 0;
}

int cmd_coproduct(const CommonOpts& opts, const std::string& w_text, bool eval0) {
  const AffinePerm w = parse_element(opts.n, w_text);
  auto cache = make_cache(opts);
  TensorElem t = *cache->get(w);
  if (eval0) {
    TensorElem constant(opts.n);
    for (const auto& [uv, k] : eval_zero_tensor(t))
      constant.add(uv.first, uv.second, SPoly::constant(opts.n, k));
    t = std::move(constant);
  }
  if (opts.json) {
    std::cout << tensor_json(t);
  } else {
    for (const auto& [uv, p] : t.terms())
      std::cout << "u=" << window_string(uv.first) << " v=" << window_string(uv.second)
                << " poly=" << spoly_string(p) << "\n";
    std::cout << "total " << t.terms().size() << "\n";
  }
  return 0;
}

int cmd_struct_const(const CommonOpts& opts, const std::string& w_text, const std::string& u_text,
                     const std::string& v_text, const std::string& method) {
  const AffinePerm w = parse_element(opts.n, w_text);
  const AffinePerm u = parse_element(opts.n, u_text);
  const AffinePerm v = parse_element(opts.n, v_text);
  SPoly p(opts.n);
  if (method == "subset") {
    p = struct_const(w, u, v);
  } else if (method == "delta") {
    auto cache = make_cache(opts);
    p = cache->get(w)->coeff(u, v);
  } else {
    throw std::invalid_argument("unknown method '" + method + "', expected delta or subset");
  }
  if (opts.json)
    std::cout << spoly_json(p);
  else
    std::cout << spoly_string(p) << "\n";
  return 0;
}

int cmd_cap(const CommonOpts& opts, const std::string& u_text, const std::string& w_text) {
  const AffinePerm u = parse_element(opts.n, u_text);
  const AffinePerm w = parse_element(opts.n, w_text);
  auto cache = make_cache(opts);
  const NilCoxElem result = cap(u, NilCoxElem::basis(w), cache.get());
  if (opts.json)
    std::cout << nilcox_json(result);
  else
    std::cout << nilcox_string(result) << "\n";
  return 0;
}

int cmd_pieri_check(const CommonOpts& opts, int max_len) {
  auto cache = make_cache(opts);
  long long cases = 0;
  ojson mismatches = ojson::array();
  for (const auto& level : elements_by_length(opts.n, max_len))
    for (const AffinePerm& w : level)
      for (int i = 1; i <= w.length(); ++i) {
        ++cases;
        const NilCoxElem via_cap = pieri_cap(i, NilCoxElem::basis(w), cache.get());
        const NilCoxElem via_strips = pieri_prime(i, NilCoxElem::basis(w));
        if (via_cap != via_strips) {
          ojson item;
          item["w"] = w.window();
          item["i"] = i;
          item["cap"] = nilcox_string(via_cap);
          item["strips"] = nilcox_string(via_strips);
          mismatches.push_back(std::move(item));
        }
      }
  const bool pass = mismatches.empty();
  if (opts.json) {
    ojson out;
    out["n"] = opts.n;
    out["max_len"] = max_len;
    out["cases"] = cases;
    out["mismatches"] = std::move(mismatches);
    out["pass"] = pass;
    std::cout << dump(out);
  } else {
    std::cout << "pieri-check n=" << opts.n << " max-len=" << max_len << ": " << cases
              << " cases, " << (pass ? "all consistent" : "MISMATCH") << "\n";
    if (!pass) std::cout << mismatches.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_symfunc(const CommonOpts& opts, const SymFunc& f) {
  if (opts.json)
    std::cout << symfunc_json(f);
  else
    std::cout << symfunc_string(f) << "\n";
  return 0;
}

int cmd_cauchy(const CommonOpts& opts, int degree) {
  const CauchyReport report = cauchy_check(opts.n, degree);
  if (opts.json) {
    ojson out;
    out["n"] = report.n;
    out["degree"] = report.max_degree;
    ojson per = ojson::array();
    for (const auto& r : report.per_degree) {
      ojson item;
      item["degree"] = r.degree;
      item["pass"] = r.pass;
      if (!r.pass) item["detail"] = r.detail;
      per.push_back(std::move(item));
    }
    out["per_degree"] = std::move(per);
    out["pass"] = report.pass();
    std::cout << dump(out);
  } else {
    for (const auto& r : report.per_degree) {
      std::cout << "degree " << r.degree << ": " << (r.pass ? "pass" : "FAIL") << "\n";
      if (!r.pass) std::cout << "  " << r.detail << "\n";
    }
  }
  return report.pass() ? 0 : 1;
}

int cmd_strong_expand(const CommonOpts& opts, const std::string& w_text,
                      const std::string& u_text) {
  const AffinePerm w = parse_element(opts.n, w_text);
  const AffinePerm u = parse_element(opts.n, u_text);
  auto cache = make_cache(opts);
  const auto expansion = strong_expand(w, u, cache.get());
  if (opts.json) {
    std::cout << grass_expansion_json(expansion);
  } else {
    for (const auto& [v, c] : expansion)
      std::cout << "v=" << window_string(v) << " coeff=" << c << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "afflag: exact affine Schubert calculus for type A.\n"
      "Elements are given as reduced words (\"s1 s0\" or \"1,0\") or windows (\"[-1,4]\");\n"
      "the coproduct cache directory comes from AFFLAG_CACHE_DIR (default: the user\n"
      "cache home), see --cache-dir/--no-cache on the relevant subcommands."};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string w_text, u_text, v_text, partition_text, method = "delta";
  int strip_size = 0, max_len = 0, degree = 0;
  bool eval0 = false;

  CLI::App* covers = app.add_subcommand("covers", "Bruhat lower covers of an element");
  add_rank(covers, opts);
  covers->add_option("w", w_text, "element")->required();
  add_json(covers, opts);

  CLI::App* marked = app.add_subcommand("marked-covers", "marked strong covers of an element");
  add_rank(marked, opts);
  marked->add_option("w", w_text, "element")->required();
  add_json(marked, opts);

  CLI::App* strips = app.add_subcommand("strips", "strong strips of a given size from an element");
  add_rank(strips, opts);
  strips->add_option("w", w_text, "element")->required();
  strips->add_option("size", strip_size, "strip size (number of marked covers)")->required();
  add_json(strips, opts);

  CLI::App* copro = app.add_subcommand("coproduct", "coproduct of A_w in the A_u (x) A_v basis");
  add_rank(copro, opts);
  copro->add_option("w", w_text, "element")->required();
  copro->add_flag("--eval0", eval0, "evaluate every coefficient at 0");
  add_json(copro, opts);
  add_cache(copro, opts);

  CLI::App* sc = app.add_subcommand("struct-const",
                                    "equivariant structure constant p^w_{u,v}");
  add_rank(sc, opts);
  sc->add_option("w", w_text, "element w")->required();
  sc->add_option("u", u_text, "element u")->required();
  sc->add_option("v", v_text, "element v")->required();
  sc->add_option("--method", method, "delta (coproduct coefficient) or subset (subset formula)")
      ->check(CLI::IsMember({"delta", "subset"}));
  add_json(sc, opts);
  add_cache(sc, opts);

  CLI::App* capcmd = app.add_subcommand("cap", "cap operator D_u applied to A_w");
  add_rank(capcmd, opts);
  capcmd->add_option("u", u_text, "cap element u")->required();
  capcmd->add_option("w", w_text, "argument element w")->required();
  add_json(capcmd, opts);
  add_cache(capcmd, opts);

  CLI::App* pieri = app.add_subcommand(
      "pieri-check", "sweep: cap-based Pieri operators against strong-strip sums");
  add_rank(pieri, opts);
  pieri->add_option("--max-len", max_len, "largest element length in the sweep")->required();
  add_json(pieri, opts);
  add_cache(pieri, opts);

  CLI::App* sschur = app.add_subcommand("strong-schur", "strong Schur function of shape w/u");
  add_rank(sschur, opts);
  sschur->add_option("w", w_text, "element w")->required();
  sschur->add_option("u", u_text, "element u")->required();
  add_json(sschur, opts);

  CLI::App* kcmd = app.add_subcommand("kschur", "k-Schur function of a k-bounded partition");
  add_rank(kcmd, opts);
  kcmd->add_option("partition", partition_text, "partition, e.g. \"2,1\" or \"[]\"")->required();
  add_json(kcmd, opts);

  CLI::App* wschur = app.add_subcommand("weak-schur", "weak Schur function of shape w/u");
  add_rank(wschur, opts);
  wschur->add_option("w", w_text, "element w")->required();
  wschur->add_option("u", u_text, "element u")->required();
  add_json(wschur, opts);

  CLI::App* cauchy = app.add_subcommand("cauchy-check",
                                        "verify the affine Cauchy identity degree by degree");
  add_rank(cauchy, opts);
  cauchy->add_option("--degree", degree, "largest degree to verify")->required();
  add_json(cauchy, opts);

  CLI::App* sexpand = app.add_subcommand(
      "strong-expand", "k-Schur expansion coefficients of Strong_{w/u}");
  add_rank(sexpand, opts);
  sexpand->add_option("w", w_text, "element w")->required();
  sexpand->add_option("u", u_text, "element u")->required();
  add_json(sexpand, opts);
  add_cache(sexpand, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (covers->parsed()) return cmd_covers(opts, w_text, false);
    if (marked->parsed()) return cmd_covers(opts, w_text, true);
    if (strips->parsed()) return cmd_strips(opts, w_text, strip_size);
    if (copro->parsed()) return cmd_coproduct(opts, w_text, eval0);
    if (sc->parsed()) return cmd_struct_const(opts, w_text, u_text, v_text, method);
    if (capcmd->parsed()) return cmd_cap(opts, u_text, w_text);
    if (pieri->parsed()) return cmd_pieri_check(opts, max_len);
    if (sschur->parsed())
      return cmd_symfunc(opts, strong_schur(parse_element(opts.n, w_text),
                                            parse_element(opts.n, u_text)));
    if (kcmd->parsed()) return cmd_symfunc(opts, kschur(opts.n, parse_partition(partition_text)));
    if (wschur->parsed())
      return cmd_symfunc(opts, weak_schur(parse_element(opts.n, w_text),
                                          parse_element(opts.n, u_text)));
    if (cauchy->parsed()) return cmd_cauchy(opts, degree);
    if (sexpand->parsed()) return cmd_strong_expand(opts, w_text, u_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
