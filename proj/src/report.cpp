#include "lieclass/report.hpp"

#include "lieclass/classical.hpp"
#include "lieclass/laplace.hpp"
#include "lieclass/zoo.hpp"

#include "json.hpp"

#include <sstream>

namespace lieclass {

namespace {

using nlohmann::json;

json divisor_json(const std::vector<DivisorPoint>& div) {
    json out = json::array();
    for (auto& d : div)
        out.push_back({{"factor", d.factor.str()}, {"multiplicity", d.multiplicity}});
    return out;
}

json analysis_json(const PDESystem& sys) {
    Prepared p = prepare_any(sys);  // throws IncompatibleSystem when not
    json a;
    std::vector<unsigned> orders;
    for (auto& g : sys.generators) orders.push_back(unsigned(g.order()));
    a["orders"] = orders;
    a["type"] = type_name(p.spencer.type_sig);
    a["omega"] = p.profile.omega;
    a["kappa"] = p.profile.kappa;
    a["gdims"] = p.profile.gdims;
    a["k_stab"] = p.profile.k_stab;
    a["char_divisor"] = divisor_json(p.profile.char_divisor);
    a["h1"] = p.spencer.h1;
    a["h2"] = p.spencer.h2;
    json mult = json::object();
    for (auto& [k, m] : p.spencer.m) mult[std::to_string(k)] = m;
    a["new_equations"] = mult;
    a["compatible"] = true;
    return a;
}

json trace_json(const std::vector<TraceEntry>& trace) {
    json t = json::array();
    for (auto& e : trace) {
        json s;
        s["type"] = e.type;
        s["kappa"] = e.kappa;
        s["branch"] = e.branch;
        s["inverse_kind"] = inverse_kind_name(e.inverse_kind);
        s["inverse_order"] = e.inverse_order;
        t.push_back(std::move(s));
    }
    return t;
}

std::string human_of(const json& doc) {
    std::ostringstream os;
    os << "command: " << doc["command"].get<std::string>() << "\n";
    if (doc.contains("diagnostics"))
        for (auto& d : doc["diagnostics"])
            os << "error [" << d["code"].get<std::string>() << "] "
               << d["message"].get<std::string>() << "\n";
    if (doc.contains("analysis")) {
        const json& a = doc["analysis"];
        if (a.contains("type")) {
            os << "type: " << a["type"].get<std::string>() << "   omega: " << a["omega"]
               << "   kappa: " << a["kappa"] << "\n";
            os << "orders:";
            for (auto& o : a["orders"]) os << " " << o;
            os << "   h1: " << a["h1"] << "   h2: " << a["h2"] << "\n";
            os << "gdims:";
            for (auto& g : a["gdims"]) os << " " << g;
            os << "\nchar divisor:";
            for (auto& d : a["char_divisor"])
                os << " (" << d["factor"].get<std::string>() << ")^" << d["multiplicity"];
            os << "\n";
        }
        os << "compatible: " << (a["compatible"].get<bool>() ? "yes" : "no") << "\n";
        if (a.contains("witness"))
            os << "witness (order " << a["witness_order"] << "): "
               << a["witness"].get<std::string>() << "\n";
    }
    if (doc.contains("invariants")) {
        const json& v = doc["invariants"];
        os << "family: " << v["family"].get<std::string>()
           << "   branch: " << v["branch"].get<std::string>() << "\n";
        for (auto& nv : v["values"]) {
            os << "  " << nv["name"].get<std::string>() << " = "
               << nv["value"].get<std::string>();
            if (!nv["condition"].get<std::string>().empty())
                os << "   (on " << nv["condition"].get<std::string>() << ")";
            os << "\n";
        }
        os << "compatibility ties: " << (v["ties_ok"].get<bool>() ? "hold" : "VIOLATED") << "\n";
    }
    if (doc.contains("step")) {
        const json& s = doc["step"];
        os << "gauge a = " << s["gauge_a"].get<std::string>() << "\n";
        os << "branch: " << s["branch"].get<std::string>()
           << "   inverse: " << s["inverse_kind"].get<std::string>()
           << " (order " << s["inverse_order"] << ")\n";
        if (s.contains("inverse_operator"))
            os << "L = " << s["inverse_operator"].get<std::string>() << "\n";
        if (s.contains("inverse_system"))
            for (auto& e : s["inverse_system"]) os << "  " << e.get<std::string>() << "\n";
        os << "transformed type: " << s["transformed_type"].get<std::string>()
           << "   kappa: " << s["kappa_before"] << " -> " << s["kappa_after"] << "\n";
        for (auto& g : s["transformed"]) os << "  " << g.get<std::string>() << " = 0\n";
    }
    if (doc.contains("pipeline")) {
        os << "route:";
        for (auto& e : doc["pipeline"]) {
            os << " " << e["type"].get<std::string>() << "(k=" << e["kappa"] << ","
               << e["inverse_kind"].get<std::string>();
            if (!e["branch"].get<std::string>().empty())
                os << "," << e["branch"].get<std::string>();
            os << ")";
        }
        os << "\n";
    }
    if (doc.contains("solution")) {
        const json& s = doc["solution"];
        os << "u = " << s["text"].get<std::string>() << "\n";
        os << "q: " << s["q"] << "   constants: " << s["constants"]
           << "   verified: " << (s["verified"].get<bool>() ? "yes" : "no") << "\n";
        if (s.contains("terminal")) os << "terminal: " << s["terminal"].get<std::string>() << "\n";
    }
    if (doc.contains("classic")) {
        const json& c = doc["classic"];
        os << "k0 = " << c["k"][0].get<std::string>() << "   h0 = "
           << c["h"][0].get<std::string>() << "\n";
        os << "k sequence:";
        for (auto& v : c["k"]) os << " " << v.get<std::string>();
        os << "\nh sequence:";
        for (auto& v : c["h"]) os << " " << v.get<std::string>();
        os << "\ndarboux: " << c["darboux"].get<std::string>();
        if (c.contains("integral_order")) os << " (integral order " << c["integral_order"] << ")";
        os << "\n";
    }
    if (doc.contains("zoo")) {
        for (auto& row : doc["zoo"]) {
            os << "kappa " << row["kappa"] << ": R = " << row["count"] << "\n";
            for (auto& e : row["types"]) {
                os << "  " << e["type"].get<std::string>();
                if (!e["stratum"].get<std::string>().empty())
                    os << "  [" << e["stratum"].get<std::string>() << "]";
                if (e["extrapolated"].get<bool>()) os << "  (extrapolated)";
                os << "\n";
            }
        }
    }
    return os.str();
}

Report finish(json doc, int status) {
    Report r;
    doc["status"] = status;
    r.exit_status = status;
    r.json = doc.dump(2);
    r.human = human_of(doc);
    return r;
}

PDESystem to_system(const InputDocument& idoc) {
    return PDESystem{idoc.equations, Frame{}};
}

json diag(const std::string& code, const std::string& message) {
    return json::array({{{"code", code}, {"message", message}}});
}

}  // namespace

Report run(const std::string& command, const InputDocument& idoc, const RunOptions& opts) {
    json doc;
    doc["command"] = command;
    try {
        PDESystem sys = to_system(idoc);
        if (command == "analyze") {
            try {
                doc["analysis"] = analysis_json(sys);
            } catch (const IncompatibleSystem& e) {
                json a;
                a["compatible"] = false;
                a["witness_order"] = e.detail.order;
                a["witness"] = e.detail.witness.str();
                std::vector<unsigned> orders;
                for (auto& g : sys.generators) orders.push_back(unsigned(g.order()));
                a["orders"] = orders;
                doc["analysis"] = a;
                doc["diagnostics"] = diag("incompatible", e.what());
                return finish(doc, ExitIncompatible);
            }
            if (opts.trace) doc["pipeline"] = trace_json(complexity_trace(sys));
            return finish(doc, ExitOk);
        }
        if (command == "laplace") {
            doc["analysis"] = analysis_json(sys);
            Prepared norm = normalize_generators(sys);
            auto [gauge, gauged] = basic_gauge(norm);
            LaplaceStep st = laplace_step(gauged, gauge);
            json s;
            s["gauge_a"] = gauge.a.str();
            s["branch"] = st.branch;
            s["inverse_kind"] = inverse_kind_name(st.inverse_kind);
            s["inverse_order"] = st.inverse_order;
            if (st.inverse_op) s["inverse_operator"] = st.inverse_op->str();
            if (st.inverse_system) {
                json fs = json::array();
                fs.push_back("u_x + (" + st.inverse_system->a.str() + ")*u = v");
                fs.push_back("u_y + (" + st.inverse_system->rho.str() + ")*u = (" +
                             st.inverse_system->B.str() + ")[v]");
                s["inverse_system"] = fs;
            }
            json tg = json::array();
            for (auto& g : st.transformed.generators) tg.push_back(g.str());
            s["transformed"] = tg;
            s["transformed_type"] = st.type.empty() ? "" : type_name([&] {
                SpencerData sd = spencer_numbers(st.transformed, st.transformed_ci);
                return sd.type_sig;
            }());
            s["kappa_before"] = st.kappa_before;
            s["kappa_after"] = st.kappa_after;
            doc["step"] = s;
            return finish(doc, ExitOk);
        }
        if (command == "invariants") {
            doc["analysis"] = analysis_json(sys);
            Prepared norm = normalize_generators(sys);
            auto [gauge, gauged] = basic_gauge(norm);
            RelativeInvariants ri = relative_invariants(gauged, gauge);
            json v;
            v["type"] = ri.type;
            v["family"] = ri.family;
            v["branch"] = ri.branch;
            v["ties_ok"] = ri.ties_ok;
            json vals = json::array();
            for (auto& nv : ri.values)
                vals.push_back({{"name", nv.name},
                                {"value", nv.value.str()},
                                {"condition", nv.condition}});
            v["values"] = vals;
            v["gauge_a"] = gauge.a.str();
            doc["invariants"] = v;
            return finish(doc, ExitOk);
        }
        if (command == "solve") {
            doc["analysis"] = analysis_json(sys);
            IntegrateResult res = integrate(sys);
            doc["pipeline"] = trace_json(res.trace);
            json s;
            s["text"] = res.solution.str(opts.func_name);
            s["q"] = res.q;
            s["constants"] = res.n_constants;
            s["verified"] = res.verified;
            s["terminal"] = res.terminal;
            s["has_quadrature"] = res.solution.has_quadrature();
            doc["solution"] = s;
            if (res.solution.has_quadrature()) {
                doc["diagnostics"] = diag("quadrature-residual",
                                          "solution contains unevaluated quadratures");
                return finish(doc, ExitResidual);
            }
            return finish(doc, ExitOk);
        }
        if (command == "classic") {
            // requires a single equation in u_xy normal form
            if (idoc.equations.size() != 1)
                throw UnsupportedType("classic expects exactly one equation");
            const DiffOp& g0 = idoc.equations[0];
            DiffOp g = g0.monic();
            if (!(g.leading_mono() == DMono{1, 1}) || g.order() != 2 ||
                !g.coeff(2, 0).is_zero() || !g.coeff(0, 2).is_zero())
                throw UnsupportedType("classic expects u_xy + a u_x + b u_y + c u = 0");
            HyperbolicE2 e{g.coeff(1, 0), g.coeff(0, 1), g.coeff(0, 0)};
            LaplaceSeq seq = invariant_sequence(e, opts.depth);
            DarbouxStatus st = darboux_status(e, seq);
            json c;
            json ks = json::array(), hs = json::array();
            for (auto& v : seq.k) ks.push_back(v.str());
            for (auto& v : seq.h) hs.push_back(v.str());
            c["k"] = ks;
            c["h"] = hs;
            c["depth"] = seq.depth;
            c["k_stop"] = seq.k_stop == Truncation::HitZero ? "hit_zero" : "depth_reached";
            c["h_stop"] = seq.h_stop == Truncation::HitZero ? "hit_zero" : "depth_reached";
            switch (st.kind) {
                case DarbouxStatus::IntegrableBothSides: c["darboux"] = "integrable_both_sides"; break;
                case DarbouxStatus::SemiIntegrable:
                    c["darboux"] = std::string("semi_integrable_") + st.side;
                    break;
                case DarbouxStatus::Inconclusive: c["darboux"] = "inconclusive"; break;
            }
            if (st.kind != DarbouxStatus::Inconclusive) {
                c["integral_order"] = st.pairs.front().integral_order;
                json prs = json::array();
                for (auto& p : st.pairs) {
                    // hand the induced pair to the formal module: it must be a
                    // compatible system of class <= 1
                    CompletedIdeal ci = complete(std::vector<DiffOp>{p.original, p.companion});
                    SymbolProfile sp = symbol_profile(ci);
                    prs.push_back({{"companion", p.companion.str()},
                                   {"pair_omega", sp.omega},
                                   {"pair_compatible",
                                    is_compatible(PDESystem{{p.original, p.companion}, Frame{}}, ci)
                                        .compatible}});
                }
                c["pairs"] = prs;
            }
            doc["classic"] = c;
            return finish(doc, ExitOk);
        }
        throw std::runtime_error("unknown command: " + command);
    } catch (const ParseError& e) {
        doc["diagnostics"] = diag(e.code, e.what());
        return finish(doc, ExitParseError);
    } catch (const IncompatibleSystem& e) {
        doc["diagnostics"] = diag("incompatible", e.what());
        return finish(doc, ExitIncompatible);
    } catch (const ReducedToODE& e) {
        json d = diag("reduced-to-ode", e.what());
        json rs = json::array();
        for (auto& g : e.residual_system) rs.push_back(g.str());
        doc["residual_system"] = rs;
        doc["diagnostics"] = d;
        return finish(doc, ExitResidual);
    } catch (const NotClassOne& e) {
        doc["diagnostics"] = diag("not-class-one", e.what());
        return finish(doc, ExitUnsupported);
    } catch (const CharNotStraightened& e) {
        doc["diagnostics"] = diag("char-not-straightened", e.what());
        return finish(doc, ExitUnsupported);
    } catch (const UnsupportedType& e) {
        doc["diagnostics"] = diag("unsupported-type", e.what());
        return finish(doc, ExitUnsupported);
    } catch (const GaugeEquationDifferential& e) {
        doc["diagnostics"] = diag("gauge-differential", e.what());
        return finish(doc, ExitUnsupported);
    } catch (const std::exception& e) {
        doc["diagnostics"] = diag("internal", e.what());
        return finish(doc, ExitUnsupported);
    }
}

Report run_zoo(const RunOptions& opts) {
    json doc;
    doc["command"] = "zoo";
    json rows = json::array();
    auto row_for = [](unsigned n) {
        json row;
        row["kappa"] = n;
        auto entries = enumerate_types(n);
        row["count"] = entries.size();
        json types = json::array();
        for (auto& e : entries) {
            json t;
            t["type"] = e.sig.name();
            t["orders"] = e.sig.orders;
            t["gcd_chain"] = e.sig.gcd_chain;
            t["stratum"] = e.sig.stratum;
            t["extrapolated"] = e.extrapolated;
            std::vector<unsigned> prof = e.profile.d;
            t["profile"] = prof;
            types.push_back(std::move(t));
        }
        row["types"] = types;
        return row;
    };
    if (opts.kappa >= 0) rows.push_back(row_for(unsigned(opts.kappa)));
    else {
        int upto = opts.upto >= 0 ? opts.upto : 10;
        for (int n = 1; n <= upto; ++n) rows.push_back(row_for(unsigned(n)));
    }
    doc["zoo"] = rows;
    Report r;
    doc["status"] = ExitOk;
    r.exit_status = ExitOk;
    r.json = doc.dump(2);
    r.human = human_of(doc);
    return r;
}

}  // namespace lieclass
