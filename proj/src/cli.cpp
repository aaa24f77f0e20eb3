#include "goldman/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "goldman/bracket.hpp"
#include "goldman/errors.hpp"
#include "goldman/intersection.hpp"
#include "goldman/parallel.hpp"
#include "goldman/render.hpp"

namespace goldman {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "goldman 1.0.0";

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json matrix_json(const ProjectiveMatrix& m) {
  return json::array({int_json(m.a()), int_json(m.b()), int_json(m.c()), int_json(m.d())});
}

json report_json(const IntersectionReport& r) {
  json out;
  out["value"] = r.value;
  out["p"] = r.p_used;
  out["q"] = r.q_used;
  out["norm"] = r.norm;
  out["oracle"] = r.oracle;
  out["agreed"] = r.agreed;
  out["stabilized"] = r.stabilized;
  return out;
}

json bracket_json(const BracketSum& s, const std::vector<DoubleCosetRep>& cosets) {
  json terms = json::array();
  for (const auto& e : s.entries()) {
    json t;
    t["coeff"] = e.coeff;
    t["class"] = e.cls.name();
    t["rep"] = matrix_json(e.rep);
    t["trace"] = int_json(e.rep.trace());
    terms.push_back(std::move(t));
  }
  json dcs = json::array();
  for (const auto& d : cosets) dcs.push_back(matrix_json(d.rep));
  json out;
  out["terms"] = std::move(terms);
  out["manhattan"] = s.manhattan();
  out["pre_grouping_count"] = s.pre_grouping_count();
  out["double_cosets"] = std::move(dcs);
  return out;
}

std::string bracket_human(const BracketSum& s) {
  if (s.zero()) return "0";
  std::string out;
  for (const auto& e : s.entries()) {
    if (!out.empty()) out += " ";
    out += (e.coeff > 0 ? "+" : "-") + std::to_string(e.coeff < 0 ? -e.coeff : e.coeff) +
           "·⟨" + e.cls.name() + "⟩";
  }
  return out;
}

struct Emitter {
  std::ostream& out;
  bool json_mode;

  void operator()(const std::string& command, const json& inputs, const json& result,
                  const std::string& human) const {
    if (json_mode) {
      json doc;
      doc["version"] = kVersion;
      doc["command"] = command;
      doc["inputs"] = inputs;
      doc["result"] = result;
      out << doc.dump(2) << "\n";
    } else {
      out << human;
    }
  }
};

// Words or [a,b,c,d] matrix literals are both accepted as element inputs.
ProjectiveMatrix parse_element(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') return parse_matrix(text);
    break;
  }
  return evaluate(parse_word(text));
}

// Terms assembled from the coset list so the JSON can echo the cosets too.
std::pair<BracketSum, std::vector<DoubleCosetRep>> bracket_with_cosets(
    const ProjectiveMatrix& x, const ProjectiveMatrix& y, long p, long q,
    const SubgroupSpec& spec) {
  if (!is_member(spec, x) || !is_member(spec, y))
    fail(ErrorCode::NotMember, "input must belong to the subgroup");
  if (classify(x) != IsometryClass::Hyperbolic || classify(y) != IsometryClass::Hyperbolic)
    return {BracketSum{}, {}};
  auto cosets = crossing_double_cosets(x, y, spec);
  ProjectiveMatrix xp = power(x, p);
  std::vector<BracketTerm> terms;
  for (const auto& dc : cosets) {
    ProjectiveMatrix term = p == 1 && q == 1 ? dc.term : compose(xp, power(conjugate(dc.rep, y), q));
    for (long c = 0; c < p * q; ++c) terms.push_back(BracketTerm{dc.sign, {}, term});
  }
  return {BracketSum::group(std::move(terms), spec), std::move(cosets)};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Goldman bracket and geodesic intersection numbers for the modular group"};
  app.name("goldman");
  app.fallthrough();  // global flags may follow the subcommand

  bool json_mode = false;
  std::string subgroup_text = "full";
  int threads = 0;
  app.add_flag("--json", json_mode, "machine-readable JSON output");
  app.add_option("--subgroup", subgroup_text, "full|gamma0:N|gamma1:N|gamma:N")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker thread count (default: GOLDMAN_THREADS or all cores)");
  app.require_subcommand(1);

  std::string w1, w2, w3, outfile;
  long p = 1, q = 1, pmax = 12;
  std::vector<double> window;
  std::vector<long> qg;

  auto* c_eval = app.add_subcommand("eval", "matrix, trace, class and translation length of a word");
  c_eval->add_option("word", w1, "group word")->required();

  auto* c_nf = app.add_subcommand("nf", "conjugacy class canonical name and conjugator");
  c_nf->add_option("word", w1)->required();

  auto* c_conj = app.add_subcommand("conj", "decide conjugacy, with witness");
  c_conj->add_option("word1", w1)->required();
  c_conj->add_option("word2", w2)->required();

  auto* c_bracket = app.add_subcommand("bracket", "Goldman bracket [<x>,<y>]");
  c_bracket->add_option("word1", w1)->required();
  c_bracket->add_option("word2", w2)->required();

  auto* c_bp = app.add_subcommand("bracket-powers", "collated bracket [<x^p>,<y^q>]");
  c_bp->add_option("word1", w1)->required();
  c_bp->add_option("word2", w2)->required();
  c_bp->add_option("p", p)->required()->check(CLI::PositiveNumber);
  c_bp->add_option("q", q)->required()->check(CLI::PositiveNumber);

  auto* c_int = app.add_subcommand("intersect", "geometric intersection number with certificates");
  c_int->add_option("word1", w1)->required();
  c_int->add_option("word2", w2)->required();
  c_int->add_option("--pmax", pmax, "exponent cap")->capture_default_str();

  auto* c_self = app.add_subcommand("self-intersect", "geometric self-intersection number");
  c_self->add_option("word", w1)->required();
  c_self->add_option("--pmax", pmax, "exponent cap")->capture_default_str();

  auto* c_oracle = app.add_subcommand("oracle", "double-coset intersection oracle |I(x,y)|");
  c_oracle->add_option("word1", w1)->required();
  c_oracle->add_option("word2", w2)->required();

  auto* c_jacobi = app.add_subcommand("jacobi", "Jacobi defect (always the zero sum)");
  c_jacobi->add_option("word1", w1)->required();
  c_jacobi->add_option("word2", w2)->required();
  c_jacobi->add_option("word3", w3)->required();

  auto* c_plot = app.add_subcommand("plot", "SVG of axes, fundamental segment and crossing translates");
  c_plot->add_option("word1", w1)->required();
  c_plot->add_option("word2", w2)->required();
  c_plot->add_option("--out", outfile, "output .svg path")->required();
  c_plot->add_option("--window", window, "XMIN XMAX YMAX")->expected(3);
  c_plot->add_option("--quasigeodesic", qg, "P Q overlay")->expected(2);

  std::vector<const char*> argv;
  argv.push_back("goldman");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Emitter emit{out, json_mode};
  try {
    SubgroupSpec spec = parse_subgroup(subgroup_text);
    if (threads > 0) set_worker_threads(threads);

    if (c_eval->parsed()) {
      ProjectiveMatrix m = parse_element(w1);
      IsometryClass k = classify(m);
      json res;
      res["matrix"] = matrix_json(m);
      res["trace"] = int_json(m.trace());
      res["class"] = isometry_class_name(k);
      res["class_name"] = conjugacy_class(m, SubgroupSpec::full()).name();
      std::ostringstream hs;
      hs << "matrix: " << m.str() << "\ntrace: " << m.trace() << "\nclass: "
         << isometry_class_name(k) << " ⟨"
         << conjugacy_class(m, SubgroupSpec::full()).name() << "⟩\n";
      if (k == IsometryClass::Hyperbolic) {
        res["translation_length"] = translation_length(m);
        hs << "translation length: " << translation_length(m) << "\n";
      }
      emit("eval", json{{"word", w1}}, res, hs.str());
      return 0;
    }
    if (c_nf->parsed()) {
      ProjectiveMatrix m = parse_element(w1);
      ConjugacyClass cls = conjugacy_class(m, spec);
      json res;
      res["class"] = cls.name();
      std::ostringstream hs;
      hs << "class: ⟨" << cls.name() << "⟩\n";
      if (classify(m) == IsometryClass::Hyperbolic) {
        RLNormalForm nf = rl_normal_form(m);
        res["conjugator"] = matrix_json(nf.conjugator);
        hs << "conjugator: " << nf.conjugator.str() << "\n";
      }
      emit("nf", json{{"word", w1}}, res, hs.str());
      return 0;
    }
    if (c_conj->parsed()) {
      ProjectiveMatrix m = parse_element(w1), n = parse_element(w2);
      auto witness = are_conjugate(m, n, spec);
      json res;
      res["conjugate"] = witness.has_value();
      std::ostringstream hs;
      if (witness) {
        res["witness"] = matrix_json(*witness);
        hs << "conjugate: yes\nwitness: " << witness->str() << "\n";
      } else {
        hs << "conjugate: no\n";
      }
      emit("conj", json{{"word1", w1}, {"word2", w2}, {"subgroup", spec.str()}}, res, hs.str());
      return 0;
    }
    if (c_bracket->parsed() || c_bp->parsed()) {
      if (c_bracket->parsed()) p = q = 1;
      ProjectiveMatrix x = parse_element(w1), y = parse_element(w2);
      auto [sum, cosets] = bracket_with_cosets(x, y, p, q, spec);
      std::ostringstream hs;
      hs << "[⟨" << w1 << "⟩" << (p > 1 ? "^" + std::to_string(p) : "") << ",⟨"
         << w2 << "⟩" << (q > 1 ? "^" + std::to_string(q) : "") << "] = "
         << bracket_human(sum) << "\n"
         << "manhattan: " << sum.manhattan() << "\nterms with multiplicity: "
         << sum.pre_grouping_count() << "\ndouble cosets: " << cosets.size() << "\n";
      json inputs{{"word1", w1}, {"word2", w2}, {"subgroup", spec.str()}};
      if (c_bp->parsed()) {
        inputs["p"] = p;
        inputs["q"] = q;
      }
      emit(c_bp->parsed() ? "bracket-powers" : "bracket", inputs, bracket_json(sum, cosets),
           hs.str());
      return 0;
    }
    if (c_int->parsed()) {
      ProjectiveMatrix x = parse_element(w1), y = parse_element(w2);
      IntersectionReport r = intersection_number(x, y, spec, pmax);
      std::ostringstream hs;
      hs << "intersection number: " << r.value << "\nnorm: " << r.norm << " at (p,q)=(" << r.p_used
         << "," << r.q_used << ")\noracle: " << r.oracle << (r.agreed ? " (agreed)" : " (DISAGREED)")
         << "\n";
      emit("intersect", json{{"word1", w1}, {"word2", w2}, {"subgroup", spec.str()}},
           report_json(r), hs.str());
      return 0;
    }
    if (c_self->parsed()) {
      ProjectiveMatrix x = parse_element(w1);
      IntersectionReport r = self_intersection_number(x, spec, pmax);
      std::ostringstream hs;
      hs << "self-intersection number: " << r.value << "\nnorm: " << r.norm << " at (p,q)=("
         << r.p_used << "," << r.q_used << ")\noracle: " << r.oracle
         << (r.agreed ? " (agreed)" : " (DISAGREED)") << "\n";
      emit("self-intersect", json{{"word", w1}, {"subgroup", spec.str()}}, report_json(r), hs.str());
      return 0;
    }
    if (c_oracle->parsed()) {
      ProjectiveMatrix x = parse_element(w1), y = parse_element(w2);
      long v = geometric_intersection_oracle(x, y, spec);
      emit("oracle", json{{"word1", w1}, {"word2", w2}, {"subgroup", spec.str()}},
           json{{"value", v}}, "|I(x,y)| = " + std::to_string(v) + "\n");
      return 0;
    }
    if (c_jacobi->parsed()) {
      ProjectiveMatrix x = parse_element(w1), y = parse_element(w2),
                       z = parse_element(w3);
      BracketSum d = jacobi_defect(x, y, z, spec);
      emit("jacobi", json{{"word1", w1}, {"word2", w2}, {"word3", w3}, {"subgroup", spec.str()}},
           bracket_json(d, {}), "jacobi defect = " + bracket_human(d) + "\n");
      return 0;
    }
    if (c_plot->parsed()) {
      ProjectiveMatrix x = parse_element(w1), y = parse_element(w2);
      PlotOptions opt;
      opt.spec = spec;
      if (!window.empty()) {
        opt.has_window = true;
        opt.xmin = window[0];
        opt.xmax = window[1];
        opt.ymax = window[2];
        if (!(opt.xmin < opt.xmax) || !(opt.ymax > 0)) {
          err << "error: window must satisfy XMIN < XMAX and YMAX > 0\n";
          return 2;
        }
      }
      if (!qg.empty()) {
        opt.qg_p = qg[0];
        opt.qg_q = qg[1];
        if (opt.qg_p < 1 || opt.qg_q < 1) {
          err << "error: quasigeodesic exponents must be positive\n";
          return 2;
        }
      }
      std::string svg = svg_plot(x, y, opt);
      std::ofstream f(outfile, std::ios::binary);
      if (!f) {
        err << "error: cannot open " << outfile << "\n";
        return 2;
      }
      f << svg;
      emit("plot", json{{"word1", w1}, {"word2", w2}, {"subgroup", spec.str()}},
           json{{"out", outfile}, {"bytes", svg.size()}},
           "wrote " + outfile + " (" + std::to_string(svg.size()) + " bytes)\n");
      return 0;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SyntaxError ? 2 : 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 3;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace goldman
