#ifndef SURFBRAID_VERIFIER_HPP_
#define SURFBRAID_VERIFIER_HPP_

// Runs the obstruction argument at explicit parameters.  The computable
// steps are: the skew handle relator expresses sigma_1^2 as a commutator;
// the degree-one symbol of sigma_1^2 - 1 equals (Z12; id) in the quotient;
// its H_1 class is Z12, which is nonzero, with a second witness from the
// disk augmentation.  The remaining inferences quantify over all invariants
// and are recorded as cited reasoning, never as computed results.

#include <algorithm>
#include <string>
#include <vector>

#include "abelianization.hpp"
#include "braid.hpp"
#include "diagram.hpp"
#include "group_algebra.hpp"
#include "ideal.hpp"

namespace surfbraid {

  enum class Verdict { ObstructionEstablished, HypothesisNotMet, Failed };

  inline std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::ObstructionEstablished: return "ObstructionEstablished";
      case Verdict::HypothesisNotMet: return "HypothesisNotMet";
      case Verdict::Failed: return "Failed";
    }
    return "?";
  }

  struct StepRecord {
    std::string name;
    bool        computed = true;
    bool        passed   = false;
    std::string detail;
  };

  struct VerificationReport {
    SurfaceParams           params;
    std::vector<StepRecord> steps;
    Verdict                 verdict = Verdict::Failed;
    WreathDiagram<Integer>  symbol;
    std::string             h1_value;
    std::string             certificate;
  };

  struct VerifierOptions {
    Truncation  trunc{};
    int         window      = 6;
    int         depth       = 1;
    std::size_t node_budget = 1000000;
  };

  inline VerificationReport verify_nonexistence(SurfaceParams const& s,
                                                VerifierOptions const& opt = {}) {
    s.validate();
    VerificationReport rep;
    rep.params = s;
    rep.symbol = WreathDiagram<Integer>(s.strands, opt.trunc);
    if (s.genus < 1) {
      rep.steps.push_back({"hypothesis", true, false,
                           "genus 0: no skew handle relator (tag 2.iii), so sigma_1^2 has no "
                           "commutator expression in the presentation"});
      rep.verdict = Verdict::HypothesisNotMet;
      return rep;
    }
    rep.steps.push_back({"hypothesis", true, true, "genus " + std::to_string(s.genus) + " >= 1"});

    // (a) sigma_1^2 is a commutator.
    BraidWord const s1i{sigma(1, -1)};
    BraidWord const comm = commutator({gen_a(1)}, s1i * BraidWord{gen_b(1)} * s1i);
    BraidWord const sq{sigma(1), sigma(1)};
    auto const      rels     = relators(s);
    BraidWord const expected = free_reduce(BraidWord{sigma(1, -1), sigma(1, -1)} * comm);
    bool const      listed   = std::any_of(rels.begin(), rels.end(), [&](Relator const& r) {
      return r.family == RelatorFamily::SkewHandle && r.word == expected;
    });
    auto const eq = bounded_equal(comm, sq, s, opt.depth, opt.node_budget);
    rep.steps.push_back({"relator_2iii_checked", true, listed && eq.equal,
                         std::string(listed ? "relator listed" : "relator missing") + "; "
                             + to_string(comm) + " = s1 s1 "
                             + (eq.equal ? "in " + std::to_string(eq.moves.size()) + " move(s)"
                                         : "not found at depth " + std::to_string(opt.depth))});

    // (b) the degree-one symbol of sigma_1^2 - 1.
    JExpression<Integer> e{{JSummand<Integer>{Integer(1), {}, 1, {sigma(1)}}}};
    auto const           symbol = degree_one_symbol(e, s, opt.trunc);
    auto const z12 = WreathDiagram<Integer>::monomial(
        s.strands, opt.trunc, DiagMonomial{{DiagSymbol::chord(1, 2)}}, Permutation(s.strands));
    auto const mem = ideal_equal(symbol, z12, s, opt.trunc, opt.window);
    rep.symbol     = symbol;
    std::string cert = std::to_string(mem.certificate.size()) + " certificate entries";
    rep.steps.push_back({"symbol_is_Z12", true, mem.member,
                         "symbol " + to_string(symbol) + (mem.member ? " equals " : " not shown equal to ")
                             + to_string(z12) + " (" + cert + ", re-expanded)"});

    // (c) H_1 class and nonvanishing witnesses.
    auto const h1 = h1_class(symbol, s);
    H1Element<Integer> z12_class(s);
    {
      H1Monomial m = z12_class.one();
      m.z12        = 1;
      z12_class.add(m, Integer(1));
    }
    rep.h1_value = to_string(h1);
    rep.steps.push_back({"h1_class_value", true, h1 == z12_class, "h1_class = " + rep.h1_value});
    auto const nz  = h1_nonzero(h1);
    auto const aug = disk_nonzero_certificate(symbol);
    std::string detail;
    if (nz) {
      rep.certificate = certificate_string(h1, nz->first, nz->second);
      detail          = "H1 " + rep.certificate;
    } else {
      detail = "H1 class vanishes";
    }
    detail += "; disk augmentation ";
    detail += aug ? "coordinate " + to_string(aug->second) + " at (" + to_string(aug->first.first)
                        + "; " + to_string(aug->first.second) + ")"
                  : std::string("vanishes");
    rep.steps.push_back({"nonzero_certificate", true, nz.has_value() && aug.has_value(), detail});

    // (d) cited inferences.
    rep.steps.push_back({"graded_isomorphism", false, true,
                         "cited: a functorial universal invariant induces an isomorphism "
                         "between the associated graded algebra and its target"});
    rep.steps.push_back({"multiplicativity", false, true,
                         "cited: a multiplicative invariant sends the commutator to a "
                         "commutator, whose degree-one class in H1 vanishes"});
    rep.steps.push_back({"contradiction", false, true,
                         "cited: sigma_1^2 - 1 would then have zero H1 class, contradicting "
                         "the computed nonzero class Z12"});

    bool const all_computed = std::all_of(rep.steps.begin(), rep.steps.end(), [](auto const& st) {
      return !st.computed || st.passed;
    });
    rep.verdict = all_computed ? Verdict::ObstructionEstablished : Verdict::Failed;
    return rep;
  }

  // Structured text: one "STEP <name> COMPUTED|CITED PASS|FAIL <detail>"
  // line per step, framed by parameter and verdict lines.
  inline std::string to_string(VerificationReport const& rep) {
    std::string out = "PARAMS genus=" + std::to_string(rep.params.genus)
                      + " boundary=" + std::to_string(rep.params.boundary)
                      + " strands=" + std::to_string(rep.params.strands) + "\n";
    for (auto const& st : rep.steps) {
      out += "STEP " + st.name + (st.computed ? " COMPUTED " : " CITED ")
             + (st.passed ? "PASS " : "FAIL ") + st.detail + "\n";
    }
    out += "VERDICT " + to_string(rep.verdict) + "\n";
    return out;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_VERIFIER_HPP_
