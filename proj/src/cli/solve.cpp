#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "riddle/cli.hpp"
#include "riddle/errors.hpp"
#include "riddle/speck.hpp"

namespace riddle::cli {

namespace {

std::string decimal(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

void solve(const RateQuery& q, const SolveOptions& opt, SolveReport& r) {
    const Rational x = solve_rate(q);
    const bool ceil = opt.ceil_subjects && q.target() == RateField::subjects;
    auto shown = [&](const Rational& v) { return ceil ? ceil_subjects(v).str() : v.to_string(); };
    r.answer = shown(x);

    if (opt.check) {
        const Rational y = solve_rate_by_proportion(q);
        r.oracle = shown(y);
        r.agreement = x == y && rate_constant(complete(q, x)) == rate_constant(q.known());
    }
    if (opt.explain) {
        const auto& k = q.known();
        const Rational c = rate_constant(k);
        auto v = [&](RateField f) { return q.given(f).magnitude.to_string(); };
        r.explanation.push_back("k = W/(S*t) = " + k.work().magnitude.to_string() + "/(" +
                                k.subjects().magnitude.to_string() + "*" + k.time().magnitude.to_string() +
                                ") = " + c.to_string());
        switch (q.target()) {
        case RateField::work:
            r.explanation.push_back("x/(" + v(RateField::subjects) + "*" + v(RateField::time) + ") = " + c.to_string());
            r.explanation.push_back("x = k*S*t = " + x.to_string());
            break;
        case RateField::subjects:
            r.explanation.push_back(v(RateField::work) + "/(x*" + v(RateField::time) + ") = " + c.to_string());
            r.explanation.push_back("x = W/(k*t) = " + x.to_string());
            break;
        case RateField::time:
            r.explanation.push_back(v(RateField::work) + "/(" + v(RateField::subjects) + "*x) = " + c.to_string());
            r.explanation.push_back("x = W/(k*S) = " + x.to_string() + " min");
            break;
        }
        if (ceil && !x.is_integer())
            r.explanation.push_back("rounded up to whole subjects: " + r.answer);
    }
}

void solve(const WeighingInstance& w, const SolveOptions& opt, SolveReport& r) {
    const WeighingAnswer a = min_weighings_formula(w);
    r.answer = std::to_string(a.weighings);
    if (opt.check) {
        const std::int64_t o = min_weighings_oracle(w);
        r.oracle = std::to_string(o);
        r.agreement = o == a.weighings;
    }
    if (opt.explain) {
        const std::int64_t n = w.n_objects();
        if (n == 1) {
            r.explanation.push_back("N = 1: the single object is the heavy one, no weighing needed");
            return;
        }
        r.explanation.push_back("3^" + std::to_string(a.exponent) + " < " + std::to_string(n) + " <= 3^" +
                                std::to_string(a.exponent + 1) + ", so i = " + std::to_string(a.exponent));
        r.explanation.push_back("P = i + 1 = " + std::to_string(a.weighings));
        const StrategyPtr tree = build_strategy(w);
        const auto& first = std::get<Weigh>(tree->action);
        const auto pan = static_cast<std::int64_t>(first.left.size());
        r.explanation.push_back("first weighing: " + std::to_string(pan) + " against " + std::to_string(pan) + ", " +
                                std::to_string(n - 2 * pan) + " set aside");
    }
}

void solve(const PigeonholeInstance& p, const SolveOptions& opt, SolveReport& r) {
    const std::int64_t f = guarantee_draws_formula(p.n_colors(), p.required());
    r.answer = std::to_string(f);
    if (opt.check) {
        if (p.feasible()) {
            const std::int64_t o = guarantee_draws_oracle(p);
            r.oracle = std::to_string(o);
            r.agreement = o == f;
        } else {
            r.oracle = "infeasible";
            r.agreement = false;
        }
    }
    if (opt.explain) {
        r.explanation.push_back("n_C = " + std::to_string(p.n_colors()) + ", n_R = " + std::to_string(p.required()));
        r.explanation.push_back("[" + std::to_string(p.n_colors()) + "(" + std::to_string(p.required()) + "-1)]+1 = " +
                                std::to_string(f));
        if (p.feasible()) {
            std::string seq;
            for (const auto& c : adversarial_sequence(p))
                seq += (seq.empty() ? "" : " - ") + c;
            r.explanation.push_back("longest unlucky run: " + (seq.empty() ? std::string("(none)") : seq));
        } else {
            r.explanation.push_back("no color holds " + std::to_string(p.required()) + " objects");
        }
        if (!p.formula_applicable())
            r.explanation.push_back("some color holds fewer than n_R - 1 objects; the closed form over-counts here");
    }
}

void solve(const TransferInstance& t, const SolveOptions& opt, SolveReport& r) {
    const auto params = transfer_formula_parameters(t);
    std::optional<Rational> formula;
    if (params)
        formula = transfer_probability_formula(params->first, params->second);
    r.answer = formula ? formula->to_string() : "n/a";
    if (opt.check) {
        const Rational p = transfer_probability_enumerate(t);
        r.oracle = p.to_string();
        if (formula)
            r.agreement = *formula == p;
    }
    if (opt.explain) {
        if (params) {
            r.explanation.push_back("n = " + std::to_string(params->first) + ", d = " + std::to_string(params->second));
            r.explanation.push_back("2n/(n+d) = " + std::to_string(2 * params->first) + "/" +
                                    std::to_string(params->first + params->second) + " = " + formula->to_string());
        } else {
            r.explanation.push_back("2n/(n+d) needs container A to hold a single color");
        }
        r.explanation.push_back("query: " + query_to_string(t.query()) + " after moving " + std::to_string(t.moved()));
    }
}

void solve(const StationInstance& s, const SolveOptions& opt, SolveReport& r) {
    const Rational walked = station_walk_formula(s);
    r.answer = walked.to_string();
    if (opt.check) {
        // Car speed 1, home at distance Y, walker speed chosen so the car
        // saves Y minutes; this needs the walker slower than the car (Y < X).
        const double x = s.early_minutes().to_double();
        const double y = s.saved_minutes().to_double();
        if (y < x) {
            const auto sim = station_walk_simulate(y, 1.0, y / (2 * x - y), x);
            r.oracle = decimal(sim.walked_minutes);
            r.agreement = std::abs(sim.walked_minutes - walked.to_double()) <= 1e-9;
        } else {
            r.oracle = "not simulated (walker would outpace the car)";
        }
    }
    if (opt.explain)
        r.explanation.push_back("X - Y/2 = " + s.early_minutes().to_string() + " - " + s.saved_minutes().to_string() +
                                "/2 = " + walked.to_string() + " min");
}

}  // namespace

SolveReport solve_puzzle(const PuzzleSpec& spec, const SolveOptions& options) {
    SolveReport r;
    r.label = spec.label;
    r.kind = spec.kind();
    std::visit([&](const auto& p) { solve(p, options, r); }, spec.payload);
    return r;
}

int cmd_solve(const std::vector<std::string>& paths, const SolveOptions& options, std::ostream& out,
              std::ostream& err) {
    int status = 0;
    std::vector<SolveReport> reports;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            err << path << ": cannot open file\n";
            status = 1;
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const ParseResult parsed = parse_puzzles(buf.str());
        for (const auto& e : parsed.errors)
            err << path << ':' << e.span.line << ':' << e.span.column << ": error[" << to_string(e.kind)
                << "]: " << e.message << '\n';
        if (!parsed.ok()) {
            status = 1;
            continue;
        }
        for (const auto& spec : parsed.puzzles)
            reports.push_back(solve_puzzle(spec, options));
    }

    const std::string text = options.format == OutputFormat::json ? render_json(reports) : render_text(reports);
    if (options.out_path) {
        std::ofstream file(*options.out_path, std::ios::binary);
        file << text;
        if (!file) {
            err << *options.out_path << ": cannot write file\n";
            return 1;
        }
    } else {
        out << text;
    }

    if (status == 0)
        for (const auto& r : reports)
            if (r.agreement && !*r.agreement)
                status = 2;
    return status;
}

}  // namespace riddle::cli
