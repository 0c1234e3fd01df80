#include "pob/cli.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pob/enumerate.hpp"
#include "pob/errors.hpp"
#include "pob/format.hpp"
#include "pob/heegaard.hpp"
#include "pob/sutured.hpp"

namespace pob {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Invariants {
  int chi_s, boundary_s, r, n, a_arcs;
  std::vector<int> genus;
  SuturedData sd;
  BalanceVerdict balance;
  AbelianInvariants h1;
};

Invariants compute_invariants(const PartialOpenBook& book) {
  Invariants inv;
  const Surface& s = book.assembled().surface();
  inv.chi_s = s.euler();
  inv.boundary_s = static_cast<int>(s.boundary_cycles().size());
  inv.genus = s.genus_per_component();
  inv.r = book.partial_count();
  BoundaryPartition part = boundary_partition(book);
  inv.n = part.n();
  inv.a_arcs = static_cast<int>(part.a_arcs.size());
  inv.sd = build_sutured(book);
  inv.balance = check_balanced(inv.sd);
  inv.h1 = h1_oracle(book);
  return inv;
}

// check one fixture assertion against computed data
bool check_expect(const Expectation& e, const Invariants& inv, std::string& detail) {
  auto intval = [&](long long got) {
    if (e.values.size() != 1 || e.values[0] != got) {
      detail = "expected " + (e.values.empty() ? "?" : std::to_string(e.values[0])) + ", got " +
               std::to_string(got);
      return false;
    }
    return true;
  };
  if (e.key == "chi_s") return intval(inv.chi_s);
  if (e.key == "boundary_s") return intval(inv.boundary_s);
  if (e.key == "genus_s") return intval(inv.genus.size() == 1 ? inv.genus[0] : -999);
  if (e.key == "r") return intval(inv.r);
  if (e.key == "n") return intval(inv.n);
  if (e.key == "a_arcs") return intval(inv.a_arcs);
  if (e.key == "gamma") return intval(inv.sd.gamma_components);
  if (e.key == "chi_r_plus") return intval(inv.sd.chi_r_plus);
  if (e.key == "chi_r_minus") return intval(inv.sd.chi_r_minus);
  if (e.key == "boundary_m") return intval(inv.sd.boundary_components_of_m);
  if (e.key == "chi_boundary_m") return intval(inv.sd.chi_boundary_m);
  if (e.key == "h1_free") return intval(inv.h1.free_rank);
  if (e.key == "h1_torsion") {
    std::vector<long long> got = inv.h1.torsion;
    if (e.values != got) {
      detail = "torsion mismatch";
      return false;
    }
    return true;
  }
  if (e.key == "balanced") {
    if (!e.flag || *e.flag != inv.balance.balanced) {
      detail = std::string("balanced is ") + (inv.balance.balanced ? "yes" : "no");
      return false;
    }
    return true;
  }
  detail = "unknown key";
  return false;
}

// assertions that need the diagram
bool check_diagram_expect(const Expectation& e, const HeegaardDiagram& hd, std::string& detail) {
  if (e.key == "chi_sigma") {
    if (e.values.size() == 1 && e.values[0] == hd.sigma.euler()) return true;
    detail = "got " + std::to_string(hd.sigma.euler());
    return false;
  }
  if (e.key == "boundary_sigma") {
    long long got = static_cast<long long>(hd.sigma.boundary_cycles().size());
    if (e.values.size() == 1 && e.values[0] == got) return true;
    detail = "got " + std::to_string(got);
    return false;
  }
  if (e.key == "alpha_beta") {
    Mat m = intersection_matrix(hd);
    std::vector<long long> flat;
    for (auto& row : m)
      for (long long v : row) flat.push_back(v);
    if (flat == e.values) return true;
    detail = "matrix mismatch";
    return false;
  }
  if (e.key == "juhasz") {
    bool got = check_juhasz_balanced(hd).balanced;
    if (e.flag && *e.flag == got) return true;
    detail = std::string("juhasz is ") + (got ? "yes" : "no");
    return false;
  }
  detail = "unknown key";
  return false;
}

bool is_diagram_key(const std::string& k) {
  return k == "chi_sigma" || k == "boundary_sigma" || k == "alpha_beta" || k == "juhasz";
}

CliResult do_validate(const PobDocument& doc, bool json) {
  ValidationReport rep = validate(doc.book);
  CliResult res;
  if (json) {
    Json j;
    j["command"] = "validate";
    Json arr = Json::array();
    for (const auto& e : rep.entries) {
      Json item;
      item["condition"] = e.condition;
      item["pass"] = e.pass;
      if (!e.detail.empty()) item["detail"] = e.detail;
      arr.push_back(item);
    }
    j["conditions"] = arr;
    j["valid"] = rep.all_pass();
    res.out = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (const auto& e : rep.entries) {
      out << (e.pass ? "ok   " : "FAIL ") << e.condition;
      if (!e.detail.empty()) out << " [" << e.detail << "]";
      out << "\n";
    }
    out << (rep.all_pass() ? "valid: yes\n" : "valid: no\n");
    res.out = out.str();
  }
  res.status = rep.all_pass() ? 0 : 1;
  return res;
}

CliResult do_invariants(const PobDocument& doc, bool json) {
  Invariants inv = compute_invariants(doc.book);
  bool expect_ok = true;
  std::vector<std::string> expect_lines;
  HeegaardDiagram hd;
  bool have_diagram = false;
  for (const Expectation& e : doc.expectations) {
    std::string detail;
    bool ok;
    if (is_diagram_key(e.key)) {
      if (!have_diagram) {
        hd = build_diagram(doc.book);
        have_diagram = true;
      }
      ok = check_diagram_expect(e, hd, detail);
    } else {
      ok = check_expect(e, inv, detail);
    }
    expect_ok = expect_ok && ok;
    expect_lines.push_back(std::string(ok ? "ok   " : "FAIL ") + "expect " + e.key +
                           (detail.empty() ? "" : " [" + detail + "]"));
  }

  CliResult res;
  if (json) {
    Json j;
    j["command"] = "invariants";
    j["chi_s"] = inv.chi_s;
    j["genus"] = inv.genus;
    j["boundary_s"] = inv.boundary_s;
    j["r"] = inv.r;
    j["n"] = inv.n;
    j["a_arcs"] = inv.a_arcs;
    j["gamma"] = inv.sd.gamma_components;
    j["chi_r_plus"] = inv.sd.chi_r_plus;
    j["chi_r_minus"] = inv.sd.chi_r_minus;
    j["boundary_m"] = inv.sd.boundary_components_of_m;
    j["chi_boundary_m"] = inv.sd.chi_boundary_m;
    j["incidence"] = inv.sd.incidence;
    j["balanced"] = inv.balance.balanced;
    j["balance_reasons"] = inv.balance.reasons;
    j["h1_free"] = inv.h1.free_rank;
    j["h1_torsion"] = inv.h1.torsion;
    j["expectations_pass"] = expect_ok;
    res.out = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "chi(S) = " << inv.chi_s << "\n";
    out << "genus(S) =";
    for (int g : inv.genus) out << " " << g;
    out << "\n";
    out << "boundary circles of S = " << inv.boundary_s << "\n";
    out << "r = " << inv.r << "\n";
    out << "n = " << inv.n << "\n";
    out << "A arcs = " << inv.a_arcs << "\n";
    out << "suture circles = " << inv.sd.gamma_components << "\n";
    out << "chi(R+) = " << inv.sd.chi_r_plus << "\n";
    out << "chi(R-) = " << inv.sd.chi_r_minus << "\n";
    out << "boundary components of M = " << inv.sd.boundary_components_of_m << "\n";
    out << "chi(boundary of M) = " << inv.sd.chi_boundary_m << "\n";
    out << "suture circles per boundary component =";
    for (int i : inv.sd.incidence) out << " " << i;
    out << "\n";
    out << "balanced: " << (inv.balance.balanced ? "yes" : "no") << "\n";
    for (const std::string& r : inv.balance.reasons) out << "  - " << r << "\n";
    out << "H1(M) = " << inv.h1.str() << "\n";
    for (const std::string& line : expect_lines) out << line << "\n";
    res.out = out.str();
  }
  res.status = expect_ok ? 0 : 1;
  return res;
}

CliResult do_heegaard(const PobDocument& doc, bool json) {
  HeegaardDiagram hd = build_diagram(doc.book);
  JuhaszVerdict v = check_juhasz_balanced(hd);
  Mat m = intersection_matrix(hd);
  auto word_str = [&](const EdgeWord& w) {
    std::ostringstream ws;
    for (int i = 0; i < w.length(); ++i)
      ws << (i ? " " : "") << "!e" << w.cross[i] << " f" << w.faces[i];
    if (w.length() == 0) ws << "f" << w.faces[0];
    return ws.str();
  };
  CliResult res;
  if (json) {
    Json j;
    j["command"] = "heegaard";
    j["faces"] = hd.sigma.face_count();
    j["edges"] = hd.sigma.edge_count();
    j["chi_sigma"] = hd.sigma.euler();
    j["boundary_sigma"] = hd.sigma.boundary_cycles().size();
    Json alpha = Json::array(), beta = Json::array();
    for (const EdgeWord& w : hd.alpha) alpha.push_back(word_str(w));
    for (const EdgeWord& w : hd.beta) beta.push_back(word_str(w));
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["matrix"] = m;
    j["juhasz"] = v.balanced;
    j["reasons"] = v.reasons;
    j["h1"] = h1_from_diagram(hd).str();
    res.out = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "sigma: faces " << hd.sigma.face_count() << ", edges " << hd.sigma.edge_count()
        << ", chi " << hd.sigma.euler() << ", boundary circles "
        << hd.sigma.boundary_cycles().size() << "\n";
    for (int f = 0; f < hd.sigma.face_count(); ++f) {
      out << "face f" << f << " (" << hd.sigma.face(f).label << "):";
      for (int it : hd.sigma.face(f).items)
        out << " " << (hd.sigma.is_free(it) ? "-" : "e" + std::to_string(hd.sigma.item(it).edge));
      out << "\n";
    }
    for (int j = 0; j < hd.r; ++j) out << "alpha " << j << ": " << word_str(hd.alpha[j]) << "\n";
    for (int j = 0; j < hd.r; ++j) out << "beta " << j << ": " << word_str(hd.beta[j]) << "\n";
    out << "intersection matrix (alpha_i . beta_j):\n";
    for (auto& row : m) {
      for (size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
      out << "\n";
    }
    out << "juhasz balanced: " << (v.balanced ? "yes" : "no") << "\n";
    for (const std::string& r : v.reasons) out << "  - " << r << "\n";
    out << "H1 from diagram = " << h1_from_diagram(hd).str() << "\n";
    res.out = out.str();
  }
  res.status = v.balanced ? 0 : 1;
  return res;
}

CliResult do_oracle_check(const PobDocument& doc, bool json) {
  AbelianInvariants from_mv = h1_oracle(doc.book);
  AbelianInvariants from_diagram = h1_from_diagram(build_diagram(doc.book));
  bool agree = from_mv == from_diagram;
  CliResult res;
  if (json) {
    Json j;
    j["command"] = "oracle-check";
    j["h1_mayer_vietoris"] = from_mv.str();
    j["h1_diagram"] = from_diagram.str();
    j["agreement"] = agree;
    res.out = j.dump(2) + "\n";
  } else {
    res.out = "H1 via gluing pieces: " + from_mv.str() + "\n" +
              "H1 via diagram:       " + from_diagram.str() + "\n" +
              "H1 agreement: " + (agree ? "yes" : "no") + "\n";
  }
  res.status = agree ? 0 : 1;
  return res;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  try {
    if (args.empty()) return {"usage: pob <command> [args]\n", 2};
    std::string cmd = args[0];
    bool json = false;
    std::vector<std::string> rest;
    std::string arc_text;
    EnumBounds bounds;
    bool count_only = false;
    for (size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--json") json = true;
      else if (args[i] == "--arc" && i + 1 < args.size()) arc_text = args[++i];
      else if (args[i] == "--max-disks" && i + 1 < args.size()) bounds.max_disks = std::stoi(args[++i]);
      else if (args[i] == "--max-handles" && i + 1 < args.size()) bounds.max_handles = std::stoi(args[++i]);
      else if (args[i] == "--max-twists" && i + 1 < args.size()) bounds.max_twists = std::stoi(args[++i]);
      else if (args[i] == "--count") count_only = true;
      else rest.push_back(args[i]);
    }

    if (cmd == "enumerate") {
      std::ostringstream out;
      int count = 0;
      enumerate_pobs(bounds, [&](const PartialOpenBook& p) {
        ++count;
        if (!count_only && !json) {
          out << "# " << count << "\n" << print_book(p) << "\n";
        }
        return true;
      });
      if (json) {
        Json j;
        j["command"] = "enumerate";
        j["count"] = count;
        return {j.dump(2) + "\n", 0};
      }
      if (count_only) return {std::to_string(count) + "\n", 0};
      return {out.str(), 0};
    }

    if (rest.empty()) return {"error: missing input file\n", 2};
    // validation failures are this command's report, not an input error
    PobDocument doc = parse_document(read_file(rest[0]), cmd != "validate");

    if (cmd == "validate") return do_validate(doc, json);
    if (cmd == "invariants") return do_invariants(doc, json);
    if (cmd == "heegaard") return do_heegaard(doc, json);
    if (cmd == "oracle-check") return do_oracle_check(doc, json);
    if (cmd == "stabilize") {
      if (arc_text.empty()) return {"error: stabilize needs --arc <word>\n", 2};
      EdgeWord arc = parse_word(doc.book, arc_text);
      PartialOpenBook grown = positive_stabilize(doc.book, arc);
      return {print_book(grown), 0};
    }
    if (cmd == "isomorphic") {
      if (rest.size() < 2) return {"error: isomorphic needs two files\n", 2};
      PobDocument other = parse_document(read_file(rest[1]));  // strict
      std::optional<IsoWitness> w = isomorphic(doc.book, other.book);
      if (json) {
        Json j;
        j["command"] = "isomorphic";
        j["isomorphic"] = w.has_value();
        if (w) j["witness"] = w->str();
        return {j.dump(2) + "\n", w ? 0 : 1};
      }
      if (w) return {"isomorphic: yes\nwitness: " + w->str() + "\n", 0};
      return {"isomorphic: none\n", 1};
    }
    return {"error: unknown command '" + cmd + "'\n", 2};
  } catch (const SyntaxError& e) {
    return {std::string("syntax error: ") + e.what() + "\n", 2};
  } catch (const Error& e) {
    return {std::string("error: ") + e.what() + "\n", 2};
  }
}

}  // namespace pob
