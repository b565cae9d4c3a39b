#include "om/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "om/error.hpp"
#include "om/io.hpp"
#include "om/mh_complex.hpp"
#include "om/os_algebra.hpp"
#include "om/salvetti.hpp"
#include "om/simplicial.hpp"
#include "om/topes.hpp"

namespace om {

namespace {

using json = nlohmann::ordered_json;

// Signals a failed check after the report has been written.
struct CheckFailed {};

struct Options {
  bool json = false;
  std::string fixture;
  std::string in;

  // salvetti
  bool f_vector = false;
  bool euler = false;
  bool poset = false;
  bool nerve = false;
  bool retraction = false;
  bool chains = false;
  // os-betti
  std::string order;
  // mh-check / gen
  std::string complex = "salvetti";
  // topes
  bool tope_poset = false;
  std::string base;
  std::string tope_order = "inclusion";
  bool simplicial = false;
  // paths
  std::string from;
  std::string to;
  bool count_only = false;
  // isomorphic
  std::string with;
  // gen
  std::string format = "cov";
};

std::string source_name(const Options& o) { return o.in.empty() ? o.fixture : o.in; }

std::string tuple(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> set_strings(const std::vector<ElementSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

std::vector<std::string> sign_strings(const std::vector<SignVector>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

OrientedMatroid load(const Options& o) {
  if (!o.in.empty() && !o.fixture.empty()) throw Error(Errc::ParseError, "give either --fixture or --in, not both");
  if (!o.in.empty()) return generate_fixture(parse_fixture_spec("file:" + o.in));
  if (o.fixture.empty()) throw Error(Errc::ParseError, "no input: give --fixture <spec> or --in <path>");
  return generate_fixture(o.fixture);
}

SignVector tope_arg(const OrientedMatroid& m, const std::string& text, const char* flag) {
  if (text.empty()) throw Error(Errc::ParseError, std::string("missing ") + flag);
  const SignVector t = SignVector::parse(text);
  if (t.size() != m.ground_size()) {
    throw Error(Errc::LengthMismatch, std::string(flag) + " has length " + std::to_string(t.size()) + ", expected " +
                                          std::to_string(m.ground_size()));
  }
  if (!m.is_tope(t)) throw Error(Errc::NotATope, text + " is not a tope");
  return t;
}

void emit(std::ostream& out, const Options& o, const json& payload, const std::vector<std::string>& text) {
  if (o.json) {
    out << payload.dump(2) << '\n';
  } else {
    for (const auto& line : text) out << line << '\n';
  }
}

json header(const std::string& command, const Options& o) {
  json j;
  j["command"] = command;
  j["fixture"] = source_name(o);
  return j;
}

bool cmd_verify(const Options& o, std::ostream& out) {
  std::vector<SignVector> vectors;
  if (!o.in.empty() && o.fixture.empty() && o.in.size() >= 4 && o.in.compare(o.in.size() - 4, 4, ".cov") == 0) {
    std::istringstream in(read_file(o.in));
    vectors = parse_sign_vectors(in);
    if (vectors.front().size() > max_ground_size()) {
      throw Error(Errc::SizeLimit, o.in + " exceeds OM_SALVETTI_MAX_N");
    }
  } else {
    vectors = load(o).covectors();
  }
  const AxiomReport report = verify_axioms(vectors);
  json j = header("verify", o);
  std::vector<std::string> text{"fixture " + source_name(o)};
  json axioms = json::object();
  for (Axiom a : {Axiom::V0, Axiom::V1, Axiom::V2, Axiom::V3}) {
    const bool ok = report.holds[static_cast<std::size_t>(a)];
    axioms[std::string(to_string(a))] = ok;
    text.push_back(std::string(to_string(a)) + (ok ? " pass" : " fail"));
  }
  j["axioms"] = axioms;
  bool pass = report.pass();
  if (!pass) {
    j["witness"] = report.describe();
    text.push_back("witness: " + report.describe());
  } else {
    try {
      const OrientedMatroid m = OrientedMatroid::from_covectors(vectors);
      const SimplicityReport simple = is_simple(m);
      j["n"] = m.ground_size();
      j["rank"] = m.rank();
      j["covectors"] = m.covectors().size();
      j["topes"] = m.topes().size();
      j["cocircuits"] = m.cocircuits().size();
      j["heights"] = m.height_profile();
      j["simple"] = simple.simple;
      std::vector<std::string> heights;
      for (auto h : m.height_profile()) heights.push_back(std::to_string(h));
      text.push_back("n=" + std::to_string(m.ground_size()) + " rank=" + std::to_string(m.rank()) +
                     " covectors=" + std::to_string(m.covectors().size()) +
                     " topes=" + std::to_string(m.topes().size()) +
                     " cocircuits=" + std::to_string(m.cocircuits().size()));
      text.push_back("heights " + join(heights, "/"));
      text.push_back(std::string("simple ") + (simple.simple ? "yes" : "no, offending " + simple.offending.to_string()));
    } catch (const Error& e) {
      if (e.code() != Errc::NotGraded) throw;
      pass = false;
      j["witness"] = e.what();
      text.push_back(e.what());
    }
  }
  j["verdict"] = pass ? "pass" : "fail";
  text.push_back(std::string("verdict ") + (pass ? "pass" : "fail"));
  emit(out, o, j, text);
  return pass;
}

bool cmd_salvetti(const Options& o, std::ostream& out) {
  const SalvettiComplex sal(load(o));
  const OrientedMatroid& m = sal.matroid();
  json j = header("salvetti", o);
  std::vector<std::string> text;
  bool pass = true;
  const bool any = o.f_vector || o.euler || o.poset || o.nerve || o.retraction || o.chains;
  if (o.f_vector || o.euler || !any) {
    const FVectorEuler fe = f_vector_and_euler(sal);
    std::vector<std::string> parts;
    if (o.f_vector || !any) {
      parts.push_back("f=" + tuple(fe.f));
      j["f_vector"] = fe.f;
    }
    if (o.euler || !any) {
      parts.push_back("χ=" + std::to_string(fe.euler));
      j["euler"] = fe.euler;
    }
    text.push_back(join(parts, " "));
  }
  if (o.nerve) {
    const NerveReport nr = nerve_check(m);
    pass = pass && nr.identical;
    j["nerve"] = {{"identical", nr.identical}, {"vertices", nr.vertices}, {"facets", nr.facets},
                  {"faces", nr.faces},         {"witness", nr.witness}};
    text.push_back(std::string("nerve ") + (nr.identical ? "identical" : "differs: " + nr.witness) +
                   " vertices=" + std::to_string(nr.vertices) + " facets=" + std::to_string(nr.facets) +
                   " faces=" + std::to_string(nr.faces));
  }
  if (o.retraction) {
    std::optional<SignVector> bad;
    for (const auto& t : m.topes()) {
      if (!retraction_check(m, t)) {
        bad = t;
        break;
      }
    }
    pass = pass && !bad;
    j["retraction"] = !bad;
    text.push_back(std::string("retraction ") + (bad ? "fails at " + bad->to_string() : "pass"));
  }
  if (o.chains) {
    const bool ok = chain_determination_check(sal);
    pass = pass && ok;
    j["chain_determination"] = ok;
    text.push_back(std::string("chain determination ") + (ok ? "pass" : "fail"));
  }
  if (o.poset) {
    std::ostringstream p;
    write_poset(p, sal);
    j["poset"] = p.str();
    text.push_back(p.str().substr(0, p.str().empty() ? 0 : p.str().size() - 1));
  }
  emit(out, o, j, text);
  return pass;
}

bool cmd_homology(const Options& o, std::ostream& out) {
  const auto groups = salvetti_homology(load(o));
  json j = header("homology", o);
  std::vector<std::string> text;
  json degrees = json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    std::vector<std::string> torsion;
    for (const auto& t : groups[k].torsion) torsion.push_back(t.str());
    degrees.push_back({{"degree", k}, {"rank", groups[k].betti}, {"torsion", torsion}});
    text.push_back("H" + std::to_string(k) + " rank " + std::to_string(groups[k].betti) + " torsion " +
                   (torsion.empty() ? "none" : join(torsion, ",")));
  }
  j["homology"] = degrees;
  emit(out, o, j, text);
  return true;
}

std::vector<int> parse_order(const std::string& text, int n) {
  std::vector<int> order;
  if (text.empty()) return order;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      order.push_back(v - 1);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad --order entry '" + item + "'");
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error(Errc::ParseError, "--order must list all elements");
  return order;
}

bool cmd_os_betti(const Options& o, std::ostream& out) {
  const OrientedMatroid m = load(o);
  const UnderlyingMatroid u = flats_from_covectors(m);
  const NbcTable table = nbc_sets(u, parse_order(o.order, m.ground_size()));
  const auto b = os_betti(u);
  json j = header("os-betti", o);
  j["betti"] = b;
  j["broken_circuits"] = set_strings(table.broken_circuits);
  j["circuits"] = set_strings(table.circuits);
  const bool agree = table.counts() == b;
  j["order_invariant"] = agree;
  std::vector<std::string> text{"b=" + tuple(b), "broken circuits " + join(set_strings(table.broken_circuits), " ")};
  if (!agree) text.push_back("counts under the given order differ: " + tuple(table.counts()));
  emit(out, o, j, text);
  return agree;
}

bool cmd_gr_compare(const Options& o, std::ostream& out) {
  const GrComparison gr = gr_comparison(load(o));
  json j = header("gr-compare", o);
  j["homology_ranks"] = gr.homology_ranks;
  j["os_betti"] = gr.os_betti;
  j["verdict"] = "equal";
  std::vector<std::string> text{"k  H_k  b_k"};
  for (std::size_t k = 0; k < gr.os_betti.size(); ++k) {
    text.push_back(std::to_string(k) + "  " + std::to_string(gr.homology_ranks[k]) + "  " +
                   std::to_string(gr.os_betti[k]));
  }
  text.push_back("torsion none");
  text.push_back("verdict equal");
  emit(out, o, j, text);
  return true;
}

bool cmd_mh_check(const Options& o, std::ostream& out) {
  std::optional<CWPoset> q;
  if (!o.in.empty() && o.in.size() >= 3 && o.in.compare(o.in.size() - 3, 3, ".cw") == 0) {
    std::istringstream in(read_file(o.in));
    q = parse_cw(in);
  } else {
    const OrientedMatroid m = load(o);
    if (o.complex == "salvetti") q = CWPoset::from_salvetti(SalvettiComplex(m));
    else if (o.complex == "dual") q = dual_complex(m);
    else throw Error(Errc::ParseError, "--complex must be salvetti or dual");
  }
  const MHReport r = mh_check(*q);
  json j = header("mh-check", o);
  std::vector<std::string> text;
  auto verdict = [&](const char* name, const CheckVerdict& v) {
    json entry{{"pass", v.pass}};
    std::string line = std::string(name) + (v.pass ? " pass" : " fail");
    if (v.witness) {
      entry["witness"] = v.witness->describe(*q);
      line += ": " + v.witness->describe(*q);
    }
    j[name] = entry;
    text.push_back(line);
  };
  verdict("QMH", r.qmh);
  verdict("LMH", r.lmh);
  verdict("MH", r.mh);
  j["local_distances_agree"] = r.local_distances_agree;
  text.push_back(std::string("local distances ") + (r.local_distances_agree ? "agree" : "differ"));
  emit(out, o, j, text);
  return r.mh.pass;
}

bool cmd_topes(const Options& o, std::ostream& out) {
  const OrientedMatroid m = load(o);
  json j = header("topes", o);
  std::vector<std::string> text;
  bool pass = true;
  j["topes"] = sign_strings(m.topes());
  text.push_back("topes " + std::to_string(m.topes().size()));
  for (const auto& t : m.topes()) text.push_back(t.to_string());
  if (o.tope_poset) {
    TopeOrder order;
    if (o.tope_order == "inclusion") order = TopeOrder::SeparationInclusion;
    else if (o.tope_order == "distance") order = TopeOrder::Distance;
    else throw Error(Errc::ParseError, "--order must be inclusion or distance");
    const SignVector base = o.base.empty() ? m.topes().front() : tope_arg(m, o.base, "--base");
    const TopePoset tp = tope_poset(m, base, order);
    const LatticeReport lr = is_lattice(tp.poset);
    json hasse = json::array();
    text.push_back("hasse base " + base.to_string());
    for (auto [lo, hi] : tp.poset.covers()) {
      hasse.push_back({tp.topes[lo].to_string(), tp.topes[hi].to_string()});
      text.push_back(tp.topes[lo].to_string() + " " + tp.topes[hi].to_string());
    }
    j["base"] = base.to_string();
    j["hasse"] = hasse;
    j["lattice"] = lr.is_lattice;
    text.push_back(std::string("lattice ") + (lr.is_lattice ? "yes" : "no"));
  }
  if (o.simplicial) {
    const LatticeEquivalenceReport le = lattice_equivalence_check(m);
    j["simplicial"] = le.simplicial;
    j["all_tope_posets_lattices"] = le.all_lattices;
    j["kpi1_predicted"] = le.kpi1_predicted;
    std::string line = std::string("simplicial ") + (le.simplicial ? "yes" : "no");
    if (le.non_simplicial_tope) line += " (witness " + le.non_simplicial_tope->to_string() + ")";
    text.push_back(line);
    line = std::string("all tope posets lattices ") + (le.all_lattices ? "yes" : "no");
    if (le.non_lattice_base) line += " (base " + le.non_lattice_base->to_string() + ")";
    text.push_back(line);
    if (le.kpi1_predicted) text.push_back("K(pi,1) predicted");
  }
  emit(out, o, j, text);
  return pass;
}

bool cmd_paths(const Options& o, std::ostream& out) {
  const OrientedMatroid m = load(o);
  const SignVector from = tope_arg(m, o.from, "--from");
  const SignVector to = tope_arg(m, o.to, "--to");
  json j = header("paths", o);
  j["from"] = from.to_string();
  j["to"] = to.to_string();
  j["distance"] = tope_distance(m, from, to);
  std::vector<std::string> text{"distance " + std::to_string(tope_distance(m, from, to))};
  if (o.count_only) {
    const auto count = count_minimal_positive_paths(m, from, to);
    j["count"] = count;
    text.push_back("paths " + std::to_string(count));
  } else {
    const auto paths = minimal_positive_paths(m, from, to);
    j["count"] = paths.size();
    text.push_back("paths " + std::to_string(paths.size()));
    json list = json::array();
    for (const auto& p : paths) {
      std::vector<std::string> edges;
      for (const auto& e : p.edges) edges.push_back("(" + e.covector.to_string() + "," + e.tope.to_string() + ")");
      list.push_back(edges);
      text.push_back(join(edges, " "));
    }
    j["paths"] = list;
  }
  emit(out, o, j, text);
  return true;
}

bool cmd_isomorphic(const Options& o, std::ostream& out) {
  const OrientedMatroid a = load(o);
  if (o.with.empty()) throw Error(Errc::ParseError, "missing --with");
  const OrientedMatroid b = generate_fixture(o.with);
  const auto witness = are_isomorphic(a, b);
  json j = header("isomorphic", o);
  j["with"] = o.with;
  j["isomorphic"] = witness.has_value();
  std::vector<std::string> text{std::string("isomorphic ") + (witness ? "yes" : "no")};
  if (witness) {
    std::vector<std::string> perm;
    for (int p : witness->permutation) perm.push_back(std::to_string(p + 1));
    j["permutation"] = perm;
    j["reorientation"] = witness->reorientation.to_string();
    text.push_back("permutation " + join(perm, " "));
    text.push_back("reorientation " + witness->reorientation.to_string());
  }
  emit(out, o, j, text);
  return witness.has_value();
}

bool cmd_gen(const Options& o, std::ostream& out) {
  std::ostringstream body;
  if (o.format == "arr") {
    const FixtureSpec spec = parse_fixture_spec(o.in.empty() ? o.fixture : "file:" + o.in);
    if (spec.kind == FixtureKind::NonPappus) throw Error(Errc::ParseError, "nonpappus has no arrangement");
    write_arrangement(body, fixture_arrangement(spec));
  } else if (o.format == "chi") {
    const FixtureSpec spec = parse_fixture_spec(o.in.empty() ? o.fixture : "file:" + o.in);
    if (spec.kind == FixtureKind::NonPappus) {
      write_chirotope(body, nonpappus_chirotope());
    } else if (spec.kind == FixtureKind::File && spec.path.size() >= 4 &&
               spec.path.compare(spec.path.size() - 4, 4, ".chi") == 0) {
      std::istringstream in(read_file(spec.path));
      write_chirotope(body, parse_chirotope(in));
    } else {
      write_chirotope(body, Chirotope::from_arrangement(fixture_arrangement(spec)));
    }
  } else if (o.format == "cov") {
    write_covectors(body, load(o));
  } else if (o.format == "poset") {
    write_poset(body, SalvettiComplex(load(o)));
  } else if (o.format == "cw") {
    const OrientedMatroid m = load(o);
    if (o.complex == "salvetti") write_cw(body, CWPoset::from_salvetti(SalvettiComplex(m)));
    else if (o.complex == "dual") write_cw(body, dual_complex(m));
    else throw Error(Errc::ParseError, "--complex must be salvetti or dual");
  } else {
    throw Error(Errc::ParseError, "--format must be cov, arr, chi, poset or cw");
  }
  if (o.json) {
    json j = header("gen", o);
    j["format"] = o.format;
    j["content"] = body.str();
    out << j.dump(2) << '\n';
  } else {
    out << body.str();
  }
  return true;
}

int exit_status(Errc code) {
  switch (code) {
    case Errc::ComparisonFailure:
    case Errc::EquivalenceViolation:
    case Errc::ConsistencyFailure:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oriented matroids, Salvetti complexes and their checks", "omsal"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--fixture", o.fixture, "boolean:n, generic:n:l, braid:n, nonpappus or file:<path>");
  app.add_option("--in", o.in, "Input file (.arr, .cov, .chi; .cw for mh-check)");

  std::map<CLI::App*, bool (*)(const Options&, std::ostream&)> handlers;
  auto sub = [&](const char* name, const char* help, bool (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = fn;
    return s;
  };
  sub("verify", "Check the covector axioms", cmd_verify);
  CLI::App* sal = sub("salvetti", "Salvetti complex statistics and checks", cmd_salvetti);
  sal->add_flag("--f-vector", o.f_vector);
  sal->add_flag("--euler", o.euler);
  sal->add_flag("--poset", o.poset, "Emit the .poset text");
  sal->add_flag("--nerve", o.nerve, "Compare the nerve with the order complex");
  sal->add_flag("--retraction", o.retraction, "Retraction check at every tope");
  sal->add_flag("--chains", o.chains, "Chain determination check");
  sub("homology", "Integral homology of the Salvetti order complex", cmd_homology);
  sub("os-betti", "nbc counts and broken circuits", cmd_os_betti)->add_option("--order", o.order,
                                                                              "Element order, e.g. 3,1,2");
  sub("gr-compare", "Salvetti homology against nbc counts", cmd_gr_compare);
  sub("mh-check", "QMH / LMH / MH checks", cmd_mh_check)
      ->add_option("--complex", o.complex, "salvetti or dual")
      ->capture_default_str();
  CLI::App* topes = sub("topes", "Topes, tope posets, simpliciality", cmd_topes);
  topes->add_flag("--poset", o.tope_poset, "Emit the Hasse diagram of a tope poset");
  topes->add_option("--base", o.base, "Base tope (default: first tope)");
  topes->add_option("--order", o.tope_order, "inclusion or distance")->capture_default_str();
  topes->add_flag("--simplicial", o.simplicial, "Simplicial vs lattice check");
  CLI::App* paths = sub("paths", "Minimal positive paths", cmd_paths);
  paths->add_option("--from", o.from)->required();
  paths->add_option("--to", o.to)->required();
  paths->add_flag("--count", o.count_only, "Only count the paths");
  sub("isomorphic", "Search for a relabeling and reorientation", cmd_isomorphic)
      ->add_option("--with", o.with, "Second fixture")
      ->required();
  CLI::App* gen = sub("gen", "Write a fixture in a text format", cmd_gen);
  gen->add_option("--format", o.format, "cov, arr, chi, poset or cw")->capture_default_str();
  gen->add_option("--complex", o.complex, "salvetti or dual (cw format)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const auto chosen = app.get_subcommands();
  try {
    return handlers.at(chosen.front())(o, out) ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace om
