// Copyright 2026 The wulist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "codespec.hpp"
#include "wulist/errors.hpp"
#include "wulist/oracles.hpp"
#include "wulist/rng.hpp"

namespace wulist::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitInfeasible = 3;

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw UsageError("field order must be at least 2");
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw UsageError("field order " + std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), m};
}

std::vector<Elem> as_elems(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

// ---- new ----

struct NewGrsArgs {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  std::string modulus, alphas, mults, out;
  int n = 0, k = 0;
};

int cmd_new_grs(const NewGrsArgs& a) {
  auto [p, m] = prime_power(a.q);
  if (a.m != 0 && a.m != m)
    throw UsageError("--m " + std::to_string(a.m) + " does not match --q " + std::to_string(a.q));
  FieldSpec spec{p, m, {}};
  if (!a.modulus.empty()) {
    if (m == 1) throw UsageError("--modulus needs an extension field");
    spec.modulus = parse_list(a.modulus);
  }
  FieldPtr f = Field::make(spec);
  if (a.n < 1 || static_cast<std::uint64_t>(a.n) >= f->order())
    throw UsageError("GRS code needs n <= q - 1");
  std::vector<Elem> alphas, mults;
  if (a.alphas.empty()) {
    for (int i = 1; i <= a.n; ++i) alphas.push_back(static_cast<Elem>(i));
  } else {
    alphas = as_elems(parse_list(a.alphas));
  }
  if (a.mults.empty())
    mults.assign(alphas.size(), 1);
  else
    mults = as_elems(parse_list(a.mults));
  if (static_cast<int>(alphas.size()) != a.n) throw UsageError("--alphas must list n points");
  const AnyCode code = GrsCode(f, a.k, std::move(alphas), std::move(mults));
  emit(a.out, code_to_json(code).dump(2) + "\n");
  return kExitOk;
}

struct NewGoppaArgs {
  std::uint32_t m = 0;
  int t = 0, n = 0;
  std::string g, support, out;
  std::uint64_t seed = 0;
};

int cmd_new_goppa(const NewGoppaArgs& a) {
  FieldPtr f = Field::make(2, a.m);
  if (a.n < 1 || static_cast<std::uint64_t>(a.n) > f->order())
    throw UsageError("Goppa code needs 1 <= n <= 2^m");
  std::vector<Elem> support;
  if (a.support.empty()) {
    for (int i = 0; i < a.n; ++i) support.push_back(static_cast<Elem>(i));
  } else {
    support = as_elems(parse_list(a.support));
  }
  if (static_cast<int>(support.size()) != a.n) throw UsageError("--support must list n elements");
  Poly g = a.g.empty() ? random_goppa_poly(*f, a.t, a.seed) : Poly(*f, as_elems(parse_list(a.g)));
  if (!a.g.empty() && g.degree() != a.t) throw UsageError("--g does not have degree t");
  const AnyCode code = GoppaCode(f, std::move(g), std::move(support));
  emit(a.out, code_to_json(code).dump(2) + "\n");
  return kExitOk;
}

// ---- encode / corrupt ----

int cmd_encode(const std::string& code_path, const std::string& msg_path,
               const std::string& out_path) {
  const AnyCode code = load_code(code_path);
  std::vector<std::vector<Elem>> out;
  for (const auto& msg : read_words(msg_path)) {
    if (const auto* g = std::get_if<GrsCode>(&code)) {
      if (static_cast<int>(msg.size()) != g->k())
        throw UsageError("message must have k = " + std::to_string(g->k()) + " entries");
      for (Elem v : msg) g->field().check(v);
      out.push_back(encode(*g, Poly(g->field(), msg)));
    } else {
      out.push_back(goppa_encode(std::get<GoppaCode>(code), msg));
    }
  }
  std::ostringstream ss;
  write_words(ss, out);
  emit(out_path, ss.str());
  return kExitOk;
}

int cmd_corrupt(const std::string& code_path, const std::string& word_path, int errors,
                std::uint64_t seed, const std::string& out_path) {
  const AnyCode code = load_code(code_path);
  const bool grs = std::holds_alternative<GrsCode>(code);
  const Field& f = grs ? std::get<GrsCode>(code).field() : std::get<GoppaCode>(code).field();
  const int n = grs ? std::get<GrsCode>(code).n() : std::get<GoppaCode>(code).n();
  if (errors < 0 || errors > n) throw UsageError("--errors must lie in [0, n]");
  Xorshift64Star rng(seed);
  auto words = read_words(word_path);
  for (auto& w : words) {
    if (static_cast<int>(w.size()) != n) throw UsageError("word length does not match n");
    for (Elem v : w) f.check(v);
    // Partial Fisher-Yates; positions in draw order.
    std::vector<std::size_t> idx(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < static_cast<std::size_t>(errors); ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
      std::swap(idx[i], idx[j]);
      if (grs)
        w[idx[i]] = f.add(w[idx[i]], 1 + static_cast<Elem>(rng.below(f.order() - 1)));
      else
        w[idx[i]] ^= 1;
    }
  }
  std::ostringstream ss;
  write_words(ss, words);
  emit(out_path, ss.str());
  return kExitOk;
}

// ---- decode / params ----

struct DecodeArgs {
  std::string code, word, out;
  int tau = 0, ell = 0, s = 0, ell_max = 64;
};

Json decode_json(const AnyCode& code, const std::vector<Elem>& r, const DecodeArgs& a,
                 bool& failed) {
  DecodeOptions opts;
  opts.ell_max = a.ell_max;
  if (a.ell || a.s) opts.forced = Multiplicities{a.s, a.ell};
  DecodeOutput out;
  if (const auto* g = std::get_if<GrsCode>(&code))
    out = wu_decode(*g, r, a.tau, opts);
  else
    out = wu_decode_goppa(std::get<GoppaCode>(code), r, a.tau, opts);
  Json j;
  j["codewords"] = Json::array();
  j["error_positions"] = Json::array();
  for (const auto& c : out.candidates) {
    const bool member = std::visit(
        [&](const auto& cd) {
          if constexpr (std::is_same_v<std::decay_t<decltype(cd)>, GrsCode>)
            return is_codeword(cd, c.codeword);
          else
            return is_member(cd, c.codeword);
        },
        code);
    if (!member || hamming(c.codeword, r) > static_cast<std::size_t>(a.tau))
      throw InternalError("decoder returned an invalid candidate");
    j["codewords"].push_back(c.codeword);
    j["error_positions"].push_back(c.error_positions);
  }
  j["params"] = {{"tau", out.tau}, {"ell", out.ell}, {"s", out.s}};
  j["path"] = to_string(out.path);
  failed = failed || out.fail();
  return j;
}

int cmd_decode(const DecodeArgs& a) {
  const AnyCode code = load_code(a.code);
  const auto words = read_words(a.word);
  if (words.empty()) throw UsageError(a.word + " holds no word");
  bool failed = false;
  Json doc;
  if (words.size() == 1) {
    doc = decode_json(code, words[0], a, failed);
  } else {
    doc = Json::array();
    for (const auto& w : words) doc.push_back(decode_json(code, w, a, failed));
  }
  emit(a.out, doc.dump(2) + "\n");
  return failed ? kExitFail : kExitOk;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int cmd_params(const std::string& code_path, int tau, int ell_max) {
  const AnyCode code = load_code(code_path);
  ParamsReport rep;
  std::ostringstream os;
  if (const auto* g = std::get_if<GrsCode>(&code)) {
    rep = grs_params(*g, tau, ell_max);
    os << "code: grs n=" << g->n() << " k=" << g->k() << " d=" << g->d() << '\n'
       << "radius: " << fixed(grs_radius(g->n(), g->d())) << '\n'
       << "tau_max: " << grs_tau_max(g->n(), g->d()) << '\n';
  } else {
    const auto& c = std::get<GoppaCode>(code);
    rep = goppa_params(c, tau, ell_max);
    os << "code: goppa n=" << c.n() << " t=" << c.t() << " k=" << c.k() << '\n'
       << "radius: " << fixed(goppa_radius(c.n(), c.t())) << '\n'
       << "tau_max: " << goppa_tau_max(c.n(), c.t()) << '\n';
  }
  os << "tau: " << tau << '\n' << "mode: " << to_string(rep.mode) << '\n';
  if (rep.mode == ParamsMode::list)
    os << "ell: " << rep.ell << '\n'
       << "s: " << rep.s << '\n'
       << "w1+w2: " << rep.w_total.str() << '\n';
  if (rep.mode == ParamsMode::infeasible) os << "reason: " << rep.reason << '\n';
  std::cout << os.str();
  return rep.mode == ParamsMode::infeasible ? kExitInfeasible : kExitOk;
}

// ---- selftest ----

int cmd_selftest(bool quick) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
    failures += !ok;
  };
  std::mt19937 rng(20120101);
  const int reps = quick ? 3 : 20;

  {
    const GrsCode code = GrsCode::standard(Field::make(13, 1), 12, 3);
    const CodebookOracle book(code);
    int checked = 0, bad = 0;
    for (int w = 0; w <= 6; ++w)
      for (int i = 0; i < reps; ++i) {
        std::vector<Elem> r = book.words()[rng() % book.size()];
        std::vector<std::size_t> idx(12);
        for (std::size_t j = 0; j < 12; ++j) idx[j] = j;
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int e = 0; e < w; ++e) r[idx[e]] = (r[idx[e]] + 1 + rng() % 12) % 13;
        std::vector<std::vector<Elem>> got;
        for (const auto& c : wu_decode(code, r, 6).candidates) got.push_back(c.codeword);
        bad += got != book.list_within(r, 6);
        ++checked;
      }
    report("grs [12,3,10] tau=6 vs codebook", bad == 0,
           std::to_string(checked) + " words, " + std::to_string(bad) + " mismatches");
  }
  {
    auto f = Field::make(2, 5);
    std::vector<Elem> sup(32);
    for (Elem i = 0; i < 32; ++i) sup[i] = i;
    const GoppaCode code(f, random_goppa_poly(*f, 4, 3), sup);
    const CodebookOracle book(code);
    int checked = 0, bad = 0;
    for (int i = 0; i < reps * 3; ++i) {
      std::vector<Elem> r = book.words()[rng() % book.size()];
      for (int e = 0; e < 5 - i % 3; ++e) r[rng() % 32] ^= 1;
      std::vector<std::vector<Elem>> got;
      for (const auto& c : wu_decode_goppa(code, r, 5).candidates) got.push_back(c.codeword);
      bad += got != book.list_within(r, 5);
      ++checked;
    }
    report("goppa n=32 t=4 tau=5 vs codebook", bad == 0,
           std::to_string(checked) + " words, " + std::to_string(bad) + " mismatches");
  }
  {
    auto f = Field::make(5, 1);
    int checked = 0, bad = 0;
    for (int i = 0; i < reps * 3; ++i) {
      auto rp = [&](int deg) {
        std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
        for (auto& v : c) v = static_cast<Elem>(rng() % 5);
        return Poly(*f, c);
      };
      HomogPoly Q = HomogPoly(1, {rp(1), rp(1)}) * HomogPoly(1, {rp(1), rp(1)}) *
                    HomogPoly(1, {rp(2) + Poly::constant(*f, 1), rp(2)});
      if (Q.is_zero()) continue;
      bad += find_linear_factors(Q, HalfInt(1), HalfInt(1)) !=
             exhaustive_factor_search(Q, HalfInt(1), HalfInt(1));
      ++checked;
    }
    report("linear factors vs exhaustive search over GF(5)", bad == 0,
           std::to_string(checked) + " forms, " + std::to_string(bad) + " mismatches");
  }
  return failures ? kExitUsage : kExitOk;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"List decoding of GRS and binary Goppa codes by rational interpolation",
               "wulist"};
  app.require_subcommand(1);

  auto* nw = app.add_subcommand("new", "Write a code spec");
  nw->require_subcommand(1);
  NewGrsArgs ng;
  auto* new_grs = nw->add_subcommand("grs", "Generalised Reed-Solomon code");
  new_grs->add_option("--q", ng.q, "Field order (prime power)")->required();
  new_grs->add_option("--m", ng.m, "Extension degree (must match --q)");
  new_grs->add_option("--modulus", ng.modulus, "Field modulus c0,...,cm");
  new_grs->add_option("--n", ng.n, "Length")->required();
  new_grs->add_option("--k", ng.k, "Dimension")->required();
  new_grs->add_option("--alphas", ng.alphas, "Evaluation points a0,...");
  new_grs->add_option("--mults", ng.mults, "Column multipliers v0,...");
  new_grs->add_option("--out", ng.out, "Output file (default stdout)");
  NewGoppaArgs np;
  auto* new_goppa = nw->add_subcommand("goppa", "Irreducible binary Goppa code");
  new_goppa->add_option("--m", np.m, "Extension degree of GF(2^m)")->required();
  new_goppa->add_option("--t", np.t, "Degree of g")->required();
  new_goppa->add_option("--n", np.n, "Length")->required();
  new_goppa->add_option("--g", np.g, "Goppa polynomial c0,...,ct");
  new_goppa->add_option("--support", np.support, "Support elements");
  new_goppa->add_option("--seed", np.seed, "Seed for the random g");
  new_goppa->add_option("--out", np.out, "Output file (default stdout)");

  std::string code_path, msg_path, word_path, out_path;
  auto* enc = app.add_subcommand("encode", "Encode messages, one per line");
  enc->add_option("--code", code_path)->required();
  enc->add_option("--message", msg_path)->required();
  enc->add_option("--out", out_path);

  int errors = 0;
  std::uint64_t seed = 0;
  auto* cor = app.add_subcommand("corrupt", "Add seeded random errors");
  cor->add_option("--code", code_path)->required();
  cor->add_option("--word", word_path)->required();
  cor->add_option("--errors", errors)->required();
  cor->add_option("--seed", seed);
  cor->add_option("--out", out_path);

  DecodeArgs da;
  auto* dec = app.add_subcommand("decode", "List decode received words");
  dec->add_option("--code", da.code)->required();
  dec->add_option("--word", da.word)->required();
  dec->add_option("--tau", da.tau, "Decoding radius")->required();
  auto* ell_opt = dec->add_option("--ell", da.ell, "Force the list size");
  auto* s_opt = dec->add_option("--s", da.s, "Force the multiplicity");
  ell_opt->needs(s_opt);
  s_opt->needs(ell_opt);
  dec->add_option("--ell-max", da.ell_max, "Largest list size searched");
  dec->add_option("--out", da.out);

  int tau = 0, ell_max = 64;
  auto* par = app.add_subcommand("params", "Report (ell, s) for a radius");
  par->add_option("--code", code_path)->required();
  par->add_option("--tau", tau)->required();
  par->add_option("--ell-max", ell_max);

  bool quick = false;
  auto* st = app.add_subcommand("selftest", "Compare the decoders with brute force");
  st->add_flag("--quick", quick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*new_grs) return cmd_new_grs(ng);
    if (*new_goppa) return cmd_new_goppa(np);
    if (*enc) return cmd_encode(code_path, msg_path, out_path);
    if (*cor) return cmd_corrupt(code_path, word_path, errors, seed, out_path);
    if (*dec) return cmd_decode(da);
    if (*par) return cmd_params(code_path, tau, ell_max);
    if (*st) return cmd_selftest(quick);
  } catch (const ParameterError& e) {
    std::cerr << "wulist: infeasible parameters: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "wulist: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wulist::cli

int main(int argc, char** argv) { return wulist::cli::run(argc, argv); }
