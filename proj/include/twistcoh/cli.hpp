#pragma once

// Job description and driver behind tools/twistcoh. Kept in the library so
// the exit-status contract can be tested without spawning processes.

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abelian.hpp"
#include "diagnostics.hpp"
#include "errors.hpp"
#include "goeritz.hpp"
#include "homology.hpp"
#include "presentation.hpp"
#include "representation.hpp"
#include "textformat.hpp"

namespace twistcoh::cli {

  // Declaration order is execution order.
  enum class Computation { check, h0, coh1, h1, uct, oracle };

  enum class OutputFormat { text, structured };

  inline std::string_view to_string(Computation c) {
    switch (c) {
      case Computation::check: return "check";
      case Computation::h0: return "h0";
      case Computation::coh1: return "coh1";
      case Computation::h1: return "h1";
      case Computation::uct: return "uct";
      case Computation::oracle: return "oracle";
    }
    return "?";
  }

  using twistcoh::to_string;

  inline std::optional<Computation> parse_computation(std::string_view s) {
    for (auto c : {Computation::check,
                   Computation::h0,
                   Computation::coh1,
                   Computation::h1,
                   Computation::uct,
                   Computation::oracle}) {
      if (to_string(c) == s) {
        return c;
      }
    }
    return std::nullopt;
  }

  struct JobSpec {
    std::string                    input_path;    // one of these two is set
    std::string                    example_name;
    std::optional<CoefficientRing> ring;          // overrides the file's ring
    std::set<Computation>          computations;
    OutputFormat                   format  = OutputFormat::text;
    std::vector<Integer>           moduli  = {2, 3, 4, 8};
    unsigned                       workers = 1;
  };

  // Throws Error subclasses (ParseError, DimensionError, ...) on bad input.
  inline NamedExample load_input(JobSpec const& job) {
    if (job.input_path.empty() == job.example_name.empty()) {
      throw PreconditionError("give exactly one of an input file or an example name");
    }
    if (!job.example_name.empty()) {
      auto e = find_example(job.example_name);
      if (!e) {
        std::string known;
        for (auto const& n : example_names()) {
          known += (known.empty() ? "" : ", ") + n;
        }
        throw PreconditionError("unknown example '" + job.example_name
                                + "' (known: " + known + ")");
      }
      return std::move(*e);
    }
    std::ifstream in(job.input_path, std::ios::binary);
    if (!in) {
      throw PreconditionError("cannot open '" + job.input_path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    NamedExample e = parse_input_file(buffer.str());
    if (e.name.empty()) {
      e.name = job.input_path;
    }
    return e;
  }

  // The input's matrices over `ring`: reduced when possible, otherwise
  // rebuilt (which re-checks invertibility).
  inline Representation representation_over(Representation const&  rep,
                                             CoefficientRing const& ring) {
    if (rep.ring().reduces_to(ring)) {
      return rep.change_ring(ring);
    }
    return Representation(rep.alphabet(), ring, rep.rank(), rep.actions());
  }

  namespace detail {

    using nlohmann::json;

    inline json integer_json(Integer const& x) {
      if (x >= std::numeric_limits<std::int64_t>::min()
          && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
      }
      return to_string(x);
    }

    inline json vector_json(IntVector const& v) {
      json out = json::array();
      for (auto const& x : v) {
        out.push_back(integer_json(x));
      }
      return out;
    }

    inline json group_json(AbelianGroupStructure const& g) {
      json torsion = json::array();
      for (auto const& t : g.torsion) {
        torsion.push_back(integer_json(t));
      }
      auto order = g.order();
      return {{"free_rank", g.free_rank},
              {"torsion", torsion},
              {"order", order ? integer_json(*order) : json(nullptr)},
              {"structure", to_string(g)}};
    }

    inline std::string group_with_order(AbelianGroupStructure const& g) {
      std::string s = to_string(g);
      if (auto order = g.order(); order && !g.is_trivial()) {
        s += " (order " + to_string(*order) + ")";
      }
      return s;
    }

    // "d(a) = [0 0 0 0], d(b) = [...]"
    inline std::string cocycle_text(IntVector const& v, Alphabet const& alphabet,
                                    std::size_t rank) {
      std::string out;
      for (std::size_t g = 0; g < alphabet.size(); ++g) {
        out += (g == 0 ? "" : ", ") + std::string("d(") + alphabet.name(g) + ") = [";
        for (std::size_t i = 0; i < rank; ++i) {
          out += (i == 0 ? "" : " ") + to_string(v[g * rank + i]);
        }
        out += "]";
      }
      return out;
    }

    class Runner {
     public:
      Runner(JobSpec const& job, NamedExample const& input, std::ostream& out,
             std::ostream& err)
          : _job(job),
            _input(input),
            _out(out),
            _err(err),
            _ring(job.ring.value_or(input.ring)) {}

      int run() {
        for (auto c : _job.computations) {
          bool ok = false;
          try {
            ok = dispatch(c);
          } catch (Error const& e) {
            emit_failure(c, e.what());
          }
          if (!ok) {
            _failed.push_back(std::string(cli::to_string(c)));
          }
        }
        if (_failed.empty()) {
          return 0;
        }
        std::string list;
        for (auto const& f : _failed) {
          list += (list.empty() ? "" : ", ") + f;
        }
        _err << "FAILED: " << list << '\n';
        return 1;
      }

     private:
      bool structured() const {
        return _job.format == OutputFormat::structured;
      }

      json record(Computation c, CoefficientRing const& ring) const {
        return {{"name", cli::to_string(c)},
                {"input", _input.name},
                {"ring", to_string(ring)}};
      }

      void emit(json const& r) {
        _out << r.dump() << '\n';
      }

      void emit_failure(Computation c, std::string const& message) {
        if (structured()) {
          json r     = record(c, _ring);
          r["ok"]    = false;
          r["error"] = message;
          emit(r);
        } else {
          _out << cli::to_string(c) << ": error: " << message << '\n';
        }
      }

      Representation rep() const {
        return representation_over(_input.representation, _ring);
      }

      // Compares against the input's expectation for (computation, ring),
      // if there is one. Returns false on mismatch.
      bool compare(std::string_view computation, CoefficientRing const& ring,
                   AbelianGroupStructure const& got, json& r) {
        auto it = _input.expected.find(expectation_key(computation, ring));
        if (it == _input.expected.end()) {
          return true;
        }
        bool const match = it->second == got;
        r["expected"]    = to_string(it->second);
        if (!structured() && !match) {
          _out << "  expected " << to_string(it->second) << ", got " << to_string(got)
               << '\n';
        }
        return match;
      }

      bool dispatch(Computation c) {
        switch (c) {
          case Computation::check: return check();
          case Computation::h0: return h0();
          case Computation::coh1: return coh1();
          case Computation::h1: return h1();
          case Computation::uct: return uct();
          case Computation::oracle: return oracle();
        }
        return false;
      }

      bool check() {
        DiagnosticReport report = validate(_input.presentation);
        Representation   r      = rep();
        report.append(check_relators_trivial(r, _input.presentation));
        if (_input.form) {
          report.append(check_bilinear_form_preserved(_input.representation, *_input.form));
        }
        bool const ok = report.ok();
        if (structured()) {
          json j           = record(Computation::check, _ring);
          json diagnostics = json::array();
          for (auto const& d : report.entries) {
            diagnostics.push_back({{"severity", to_string(d.severity)},
                                   {"message", d.message}});
          }
          j["diagnostics"] = diagnostics;
          j["ok"]          = ok;
          emit(j);
        } else {
          _out << "check: " << (ok ? "ok" : "failed") << " ("
               << report.count(Diagnostic::Severity::error) << " errors, "
               << report.count(Diagnostic::Severity::warning) << " warnings)\n";
          for (auto const& d : report.entries) {
            _out << "  " << to_string(d.severity) << ": " << d.message << '\n';
          }
        }
        return ok;
      }

      bool h0() {
        auto g  = coinvariants(rep());
        json j  = record(Computation::h0, _ring);
        j.update(group_json(g));
        if (!structured()) {
          _out << "H_0 = " << group_with_order(g) << '\n';
        }
        bool const ok = compare("h0", _ring, g, j);
        j["ok"]       = ok;
        if (structured()) {
          emit(j);
        }
        return ok;
      }

      bool coh1() {
        Representation const r      = rep();
        CohomologyResult     result = h1_cohomology(_input.presentation, r);
        json                 j      = record(Computation::coh1, _ring);
        j.update(group_json(result.h1));
        json witnesses = json::array();
        for (auto const& w : result.witnesses) {
          witnesses.push_back({{"order", integer_json(w.order)},
                               {"cocycle", vector_json(w.vector)}});
        }
        j["witnesses"] = witnesses;
        if (!structured()) {
          _out << "H^1 = " << group_with_order(result.h1) << '\n';
          for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
            auto const& w = result.witnesses[i];
            _out << "  witness " << i + 1 << " (order "
                 << (w.order == 0 ? std::string("infinite") : to_string(w.order))
                 << "): " << cocycle_text(w.vector, *r.alphabet(), r.rank()) << '\n';
          }
        }
        bool ok = compare("coh1", _ring, result.h1, j);

        if (_input.kerf) {
          try {
            auto fast      = kerf_reduction(_input.presentation, r, *_input.kerf);
            bool agree     = fast.h1 == result.h1;
            j["kerf"]      = group_json(fast.h1);
            j["kerf"]["agrees"] = agree;
            if (!structured()) {
              _out << "H^1 via kerf = " << group_with_order(fast.h1)
                   << (agree ? "" : "  (DISAGREES)") << '\n';
            }
            ok = ok && agree;
          } catch (PreconditionError const& e) {
            // f is only a valid splitting for some rings; not a failure.
            j["kerf"] = {{"skipped", e.what()}};
            if (!structured()) {
              _out << "H^1 via kerf: skipped (" << e.what() << ")\n";
            }
          }
        }
        j["ok"] = ok;
        if (structured()) {
          emit(j);
        }
        return ok;
      }

      bool h1() {
        auto g = h1_homology(_input.presentation, rep());
        json j = record(Computation::h1, _ring);
        j.update(group_json(g));
        if (!structured()) {
          _out << "H_1 = " << group_with_order(g) << '\n';
        }
        bool const ok = compare("h1", _ring, g, j);
        j["ok"]       = ok;
        if (structured()) {
          emit(j);
        }
        return ok;
      }

      // Always over Z; the job ring does not apply.
      bool uct() {
        auto const     z     = CoefficientRing::integers();
        Representation rep_z = representation_over(_input.representation, z);
        UctReport      report = uct_check(_input.presentation, rep_z, _job.moduli);
        json           j      = record(Computation::uct, z);
        j["h0"]               = group_json(report.h0);
        j["h1"]               = group_json(report.h1);
        json comparisons      = json::array();
        for (auto const& c : report.comparisons) {
          comparisons.push_back({{"ring", to_string(c.ring)},
                                 {"computed", group_json(c.computed)},
                                 {"predicted", group_json(c.predicted)},
                                 {"consistent", c.consistent()}});
          if (!structured()) {
            _out << "UCT " << to_string(c.ring) << ": H^1 = " << to_string(c.computed)
                 << ", predicted " << to_string(c.predicted) << ": "
                 << (c.consistent() ? "consistent" : "INCONSISTENT") << '\n';
          }
        }
        j["comparisons"] = comparisons;
        j["ok"]          = report.consistent();
        if (structured()) {
          emit(j);
        }
        return report.consistent();
      }

      // Mod-2 enumeration, checked against the engine over Z/2.
      bool oracle() {
        auto const two    = CoefficientRing::integers_mod(2);
        auto       counts = brute_force_h1_mod2(_input.presentation,
                                          representation_over(_input.representation, two),
                                          _job.workers);
        auto       engine = h1_cohomology(_input.presentation,
                                    representation_over(_input.representation, two))
                          .h1.order();
        bool const agree = engine && *engine == counts.h1_count;
        if (structured()) {
          json j             = record(Computation::oracle, two);
          j["candidates"]    = counts.candidates;
          j["z1"]            = counts.z1_count;
          j["b1"]            = counts.b1_count;
          j["h1"]            = counts.h1_count;
          j["order"]         = counts.h1_count;
          j["engine_order"]  = engine ? integer_json(*engine) : json(nullptr);
          j["ok"]            = agree;
          emit(j);
        } else {
          _out << "oracle Z/2: " << counts.candidates << " candidates, z1 = "
               << counts.z1_count << ", b1 = " << counts.b1_count
               << ", h1 = " << counts.h1_count << " (order " << counts.h1_count
               << "); engine order " << (engine ? to_string(*engine) : "infinite")
               << ": " << (agree ? "agree" : "DISAGREE") << '\n';
        }
        return agree;
      }

      JobSpec const&           _job;
      NamedExample const&      _input;
      std::ostream&            _out;
      std::ostream&            _err;
      CoefficientRing          _ring;
      std::vector<std::string> _failed;
    };

  }  // namespace detail

  // Exit status: 0 when every stage passes (diagnostics clean, expectations
  // met, cross-checks agree), 1 when some stage fails, 2 when the job or
  // its input cannot be used at all.
  inline int run(JobSpec const& job, std::ostream& out, std::ostream& err) {
    if (job.computations.empty()) {
      err << "error: no computation selected\n";
      return 2;
    }
    std::optional<NamedExample> input;
    try {
      input = load_input(job);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    return detail::Runner(job, *input, out, err).run();
  }

}  // namespace twistcoh::cli
