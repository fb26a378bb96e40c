#include "diffcert/report.hpp"

#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "diffcert/parse.hpp"

namespace diffcert {

namespace {

using Json = nlohmann::ordered_json;

Json operator_json(const DifferenceOperator& op) {
    Json j;
    if (op.is_shift()) {
        j["kind"] = "shift";
    } else {
        j["kind"] = "q";
        j["q"] = op.field().is_symbolic() ? "symbolic" : op.field().numeric_q_value().str();
    }
    return j;
}

Json coeff_lists(const RatFun& f) {
    Json j;
    Json num = Json::array(), den = Json::array();
    for (int i = 0; i <= f.num().degree(); ++i)
        num.push_back(render_scalar(f.num().coeff((std::size_t)i)));
    for (int i = 0; i <= f.den().degree(); ++i)
        den.push_back(render_scalar(f.den().coeff((std::size_t)i)));
    j["num"] = num;
    j["den"] = den;
    return j;
}

Json lambda_json(const ScalarVec& lambda) {
    Json a = Json::array();
    for (const Scalar& s : lambda) a.push_back(render_scalar(s));
    return a;
}

Json lattice_json(const IntMat& m) {
    Json a = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        a.push_back(r);
    }
    return a;
}

Rat parse_rational_literal(const std::string& text) {
    std::size_t slash = text.find('/');
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad rational literal: " + s);
        for (; i < s.size(); ++i)
            if (!std::isdigit((unsigned char)s[i]))
                throw std::invalid_argument("bad rational literal: " + s);
        return Int(s);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in q literal");
    return Rat(num) / Rat(den);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

SystemMatrix parse_matrix(const std::string& text, const ConstField& field) {
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("matrix literal must look like [a,b;c,d]");
    body = body.substr(1, body.size() - 2);
    std::vector<std::vector<RatFun>> rows;
    for (const std::string& row_text : split(body, ';')) {
        std::vector<RatFun> row;
        for (const std::string& cell : split(row_text, ','))
            row.push_back(parse_expression(cell, field));
        rows.push_back(std::move(row));
    }
    const std::size_t d = rows.size();
    std::vector<RatFun> entries;
    for (const auto& row : rows) {
        if (row.size() != d) throw std::invalid_argument("matrix literal is not square");
        for (const auto& e : row) entries.push_back(e);
    }
    return SystemMatrix((long)d, std::move(entries));
}

RatFun sigma_delta(const RatFun& g, const DifferenceOperator& op) {
    return apply_sigma(g, op, 1) - g;
}

struct Builder {
    const Query& query;
    Json doc;
    std::string verdict;
    std::string summary;
    bool verified = true;  // stays true only if every emitted certificate rechecks

    explicit Builder(const Query& q) : query(q) {
        doc["command"] = q.command;
        doc["operator"] = operator_json(q.op);
        doc["input"] = Json::array();
    }

    void check(bool ok) { verified = verified && ok; }

    Report finish(const std::string& instantiates) {
        doc["verdict"] = verdict;
        if (!doc.contains("certificate")) doc["certificate"] = Json::object();
        doc["instantiates"] = instantiates;
        doc["verified"] = verified;
        Report r;
        r.verdict = verdict;
        r.json = doc.dump(2);
        r.summary = summary;
        r.verified = verified;
        return r;
    }
};

std::string group_instantiates(const Query& q) {
    if (q.jordan > 0) return "jordan-product-classification";
    if (q.expressions.size() > 1)
        return q.additive ? "hyperplane-relation-classification" : "torus-lattice-classification";
    return q.additive ? "rank-one-additive-classification"
                      : "rank-one-multiplicative-classification";
}

Json group_json(const GroupDescriptor& g) {
    Json j;
    j["group"] = g.name();
    j["transcendence_degree"] = transcendence_degree(g);
    if (g.kind == GroupDescriptor::Kind::CyclicMu) j["mu"] = g.mu_order;
    if (g.kind == GroupDescriptor::Kind::SubtorusOfGm) j["lattice"] = lattice_json(g.lattice);
    if (g.kind == GroupDescriptor::Kind::SubspaceOfGa) {
        Json rel = Json::array();
        for (const auto& row : g.relations) rel.push_back(lambda_json(row));
        j["relations"] = rel;
    }
    if (g.kind == GroupDescriptor::Kind::Product) {
        Json f = Json::array();
        for (const auto& part : g.factors) f.push_back(group_json(part));
        j["factors"] = f;
    }
    return j;
}

Report run_parsed(const Query& query) {
    const DifferenceOperator& op = query.op;
    const ConstField& field = op.field();
    Builder b(query);

    if (query.command == "iterate") {
        if (query.expressions.size() != 1)
            throw std::invalid_argument("iterate expects one matrix literal");
        SystemMatrix a = parse_matrix(query.expressions[0], field);
        b.doc["input"].push_back(query.expressions[0]);
        SystemMatrix an = iterate_matrix(a, op, query.iterations);
        Json rows = Json::array();
        for (long i = 0; i < an.dim(); ++i) {
            Json row = Json::array();
            for (long j = 0; j < an.dim(); ++j) row.push_back(render(an.at(i, j)));
            rows.push_back(row);
        }
        b.verdict = "iterated";
        b.doc["certificate"] = Json{{"matrix", rows}, {"n", query.iterations}};
        b.summary = "A_" + std::to_string(query.iterations) + " computed (dim " +
                    std::to_string(an.dim()) + ")";
        // Recheck the defining product.
        SystemMatrix check = SystemMatrix::identity(a.dim());
        for (long k = 0; k < query.iterations; ++k) check = apply_sigma(a, op, k) * check;
        b.check(check == an);
        return b.finish("iterated-system-product");
    }

    std::vector<RatFun> fs;
    for (const std::string& text : query.expressions) {
        RatFun f = parse_expression(text, field);
        fs.push_back(f);
        b.doc["input"].push_back(render(f));
    }
    if (fs.empty()) throw std::invalid_argument("no input expression");

    if (query.command == "summable") {
        auto g = is_summable(fs[0], op);
        if (g) {
            b.verdict = "summable";
            b.doc["certificate"] = Json{{"g", render(*g)}, {"g_coeffs", coeff_lists(*g)}};
            b.check(sigma_delta(*g, op) == fs[0]);
            b.summary = "summable: g = " + render(*g);
        } else {
            b.verdict = "not-summable";
            ReducedForm rf = reduce(fs[0], op);
            Json obstruction = Json::array();
            for (const auto& orb : rf.orbit_obstructions)
                obstruction.push_back(render(orb.representative));
            if (op.is_q() && !(rf.laurent_obstruction == Scalar(0)))
                obstruction.push_back("x^0 coefficient " +
                                      render_scalar(rf.laurent_obstruction));
            b.doc["certificate"] = Json{{"obstruction", obstruction}};
            b.summary = "not summable";
        }
        return b.finish("rational-summability-reduction");
    }

    if (query.command == "telescope") {
        auto cert = parametrized_telescoper(fs[0], op, (unsigned)query.max_order);
        if (cert) {
            b.verdict = "telescoper";
            b.doc["certificate"] =
                Json{{"g", render(cert->g)},
                     {"g_coeffs", coeff_lists(cert->g)},
                     {"lambda", lambda_json(cert->lambda)}};
            RatFun combo;
            for (std::size_t i = 0; i < cert->lambda.size(); ++i)
                combo += RatFun(Poly(cert->lambda[i])) * apply_derivation(fs[0], op, (unsigned)i);
            b.check(sigma_delta(cert->g, op) == combo);
            b.summary = "telescoper of order " + std::to_string(cert->lambda.size() - 1);
        } else {
            b.verdict = "no-relation-up-to-order";
            b.doc["certificate"] = Json{{"n", query.max_order}};
            b.summary = "no telescoper up to order " + std::to_string(query.max_order);
        }
        return b.finish("parameterized-telescoping");
    }

    if (query.command == "product-form") {
        ProductForm form = gp_normal_form(fs[0], op);
        b.verdict = form.kernel_trivial() ? "product-form-trivial-kernel" : "product-form";
        b.doc["certificate"] = Json{{"c", render_scalar(form.constant)},
                                    {"n", form.monomial_exp},
                                    {"g", render(form.telescoped)},
                                    {"kernel_num", render(form.kernel_num)},
                                    {"kernel_den", render(form.kernel_den)}};
        RatFun rebuilt = RatFun(Poly(form.constant)) *
                         RatFun(Poly::variable()).pow(form.monomial_exp) *
                         (apply_sigma(form.telescoped, op, 1) / form.telescoped) *
                         (RatFun(form.kernel_num) / RatFun(form.kernel_den));
        b.check(rebuilt == fs[0]);
        b.summary = "a = " + render_scalar(form.constant) +
                    (op.is_q() ? " * x^" + std::to_string(form.monomial_exp) : "") +
                    " * s(g)/g * u/v with g = " + render(form.telescoped) +
                    ", u = " + render(form.kernel_num) + ", v = " + render(form.kernel_den);
        return b.finish("multiplicative-normal-form");
    }

    if (query.command == "depend-add") {
        auto cert = additive_dependence(fs, op);
        if (cert) {
            b.verdict = "dependent";
            b.doc["certificate"] = Json{{"lambda", lambda_json(cert->lambda)},
                                        {"g", render(cert->g)},
                                        {"g_coeffs", coeff_lists(cert->g)}};
            RatFun combo;
            for (std::size_t i = 0; i < fs.size(); ++i)
                combo += RatFun(Poly(cert->lambda[i])) * fs[i];
            b.check(sigma_delta(cert->g, op) == combo);
            b.summary = "dependent: g = " + render(cert->g);
        } else {
            b.verdict = "independent";
            b.summary = "independent";
        }
        return b.finish("additive-dependence-criterion");
    }

    if (query.command == "depend-mult") {
        MultiplicativeLattice lat = multiplicative_dependence(fs, op);
        b.verdict = lat.basis.empty() ? "independent" : "dependent";
        Json certs = Json::array();
        for (const auto& c : lat.certificates) {
            Json jc;
            Json lv = Json::array();
            for (const auto& x : c.lambda) lv.push_back(x.str());
            jc["lambda"] = lv;
            jc["g"] = render(c.g);
            certs.push_back(jc);
            RatFun prod{Scalar(1)};
            for (std::size_t i = 0; i < fs.size(); ++i)
                prod *= fs[i].pow(c.lambda[i].convert_to<long>());
            b.check(apply_sigma(c.g, op, 1) / c.g == prod);
        }
        b.doc["certificate"] = Json{{"lattice", lattice_json(lat.basis)},
                                    {"basis_certificates", certs}};
        b.summary = lat.basis.empty()
                        ? "independent"
                        : "lattice of rank " + std::to_string(lat.basis.size());
        return b.finish("multiplicative-dependence-criterion");
    }

    if (query.command == "galois") {
        GroupDescriptor g;
        if (query.jordan > 0) {
            g = classify_jordan(fs[0], query.jordan, op);
        } else if (fs.size() > 1) {
            g = query.additive ? classify_unipotent(fs, op) : classify_diagonal(fs, op);
        } else {
            g = query.additive ? galois_rank_one_add(fs[0], op)
                               : galois_rank_one_mult(fs[0], op);
        }
        b.verdict = g.name();
        b.doc["certificate"] = group_json(g);
        b.summary = "group " + g.name() + ", transcendence degree " +
                    std::to_string(transcendence_degree(g));
        return b.finish(group_instantiates(query));
    }

    if (query.command == "difftrans-add" || query.command == "difftrans-mult" ||
        query.command == "ogawara") {
        Verdict v;
        if (query.command == "difftrans-add")
            v = diff_transcendence_additive(fs[0], op);
        else if (query.command == "difftrans-mult")
            v = diff_transcendence_mult(fs[0], op);
        else
            v = ogawara_classify(fs[0], op);
        b.verdict = v.kind_name();
        Json cert;
        if (v.telescoper) {
            cert["lambda"] = lambda_json(v.telescoper->lambda);
            if (query.command != "difftrans-mult") {
                cert["g"] = render(v.telescoper->g);
                cert["g_coeffs"] = coeff_lists(v.telescoper->g);
                RatFun combo;
                for (std::size_t i = 0; i < v.telescoper->lambda.size(); ++i)
                    combo += RatFun(Poly(v.telescoper->lambda[i])) *
                             apply_derivation(fs[0], op, (unsigned)i);
                b.check(sigma_delta(v.telescoper->g, op) == combo);
            }
        }
        if (v.product) {
            cert["c"] = render_scalar(v.product->c);
            cert["n"] = v.product->n;
            cert["g"] = render(v.product->g);
            cert["g_coeffs"] = coeff_lists(v.product->g);
            RatFun rebuilt = RatFun(Poly(v.product->c)) *
                             RatFun(Poly::variable()).pow(v.product->n) *
                             (apply_sigma(v.product->g, op, 1) / v.product->g);
            b.check(rebuilt == fs[0]);
        }
        if (v.kind == Verdict::Kind::ProvablyTranscendental)
            cert["witness"] = render(v.witness);
        if (v.kind == Verdict::Kind::RationalSolution) {
            cert["g"] = render(v.solution);
            cert["g_coeffs"] = coeff_lists(v.solution);
            b.check(sigma_delta(v.solution, op) == fs[0]);
        }
        b.doc["certificate"] = cert.is_null() ? Json::object() : cert;
        b.summary = std::string(v.kind_name());
        if (v.kind == Verdict::Kind::RationalSolution)
            b.summary += ": z = " + render(v.solution);
        std::string tag;
        if (query.command == "ogawara")
            tag = "formal-solution-classification";
        else if (query.command == "difftrans-add")
            tag = op.is_shift() ? "shift-telescoper-dichotomy" : "q-telescoper-dichotomy";
        else
            tag = op.is_shift() ? "shift-homogeneous-dichotomy" : "q-homogeneous-dichotomy";
        return b.finish(tag);
    }

    throw std::invalid_argument("unknown command: " + query.command);
}

}  // namespace

DifferenceOperator parse_operator_spec(const std::string& kind, const std::string& qvalue) {
    if (kind == "shift") {
        if (!qvalue.empty())
            throw std::invalid_argument("the shift operator takes no q value");
        return DifferenceOperator::shift();
    }
    if (kind == "q") {
        if (qvalue.empty() || qvalue == "symbolic")
            return DifferenceOperator::q_dilation(ConstField::symbolic_q());
        return DifferenceOperator::q_dilation(ConstField::numeric_q(parse_rational_literal(qvalue)));
    }
    throw std::invalid_argument("operator must be 'shift' or 'q', got '" + kind + "'");
}

Report run_query(const Query& query) { return run_parsed(query); }

namespace {

struct CorpusCase {
    std::size_t line_number = 0;
    std::string error;     // nonempty if malformed
    std::string expected;
    std::optional<Query> query;
};

CorpusCase parse_corpus_line(const std::string& line, std::size_t line_number) {
    CorpusCase c;
    c.line_number = line_number;
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 4) {
        c.error = "expected 4 tab-separated fields";
        return c;
    }
    try {
        Query q;
        q.command = trim(fields[0]);
        std::vector<std::string> op_tokens = split(trim(fields[1]), ' ');
        if (op_tokens.empty() || op_tokens[0].empty()) throw std::invalid_argument("missing operator");
        std::string kind = op_tokens[0];
        std::string qvalue;
        std::size_t eq = kind.find('=');
        if (eq != std::string::npos) {
            qvalue = kind.substr(eq + 1);
            kind = kind.substr(0, eq);
        }
        q.op = parse_operator_spec(kind, qvalue);
        for (std::size_t i = 1; i < op_tokens.size(); ++i) {
            const std::string& t = op_tokens[i];
            if (t.empty()) continue;
            if (t == "additive") {
                q.additive = true;
            } else if (t.rfind("max-order=", 0) == 0) {
                q.max_order = std::stol(t.substr(10));
            } else if (t.rfind("jordan=", 0) == 0) {
                q.jordan = std::stol(t.substr(7));
            } else if (t.rfind("n=", 0) == 0) {
                q.iterations = std::stol(t.substr(2));
            } else {
                throw std::invalid_argument("unknown operator option: " + t);
            }
        }
        if (q.command == "iterate") {
            q.expressions.push_back(trim(fields[2]));
        } else {
            for (const std::string& e : split(fields[2], ';')) q.expressions.push_back(trim(e));
        }
        c.expected = trim(fields[3]);
        if (q.command.empty() || c.expected.empty())
            throw std::invalid_argument("missing command or expected tag");
        c.query = std::move(q);
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    return c;
}

}  // namespace

CorpusOutcome run_corpus(const std::string& path, long jobs, std::ostream& log) {
    CorpusOutcome outcome;
    std::ifstream in(path);
    if (!in) {
        outcome.errors = 1;
        outcome.first_divergence = "cannot open corpus file: " + path;
        log << outcome.first_divergence << "\n";
        return outcome;
    }

    std::vector<CorpusCase> cases;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string body = line.substr(0, line.find('#'));
        if (trim(body).empty()) continue;
        cases.push_back(parse_corpus_line(body, line_number));
    }

    struct Result {
        bool ran = false;
        std::string verdict;
        std::string error;
    };
    std::vector<Result> results(cases.size());
    std::size_t worker_count = jobs > 1 ? (std::size_t)jobs : 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            if (!cases[i].error.empty()) continue;
            try {
                results[i].verdict = run_query(*cases[i].query).verdict;
                results[i].ran = true;
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };
    if (worker_count <= 1 || cases.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < worker_count; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    for (std::size_t i = 0; i < cases.size(); ++i) {
        const CorpusCase& c = cases[i];
        ++outcome.total;
        if (!c.error.empty()) {
            ++outcome.errors;
            log << "line " << c.line_number << ": MALFORMED (" << c.error << ")\n";
            continue;
        }
        if (!results[i].ran) {
            ++outcome.failed;
            log << "line " << c.line_number << ": ERROR (" << results[i].error << ")\n";
            if (outcome.first_divergence.empty())
                outcome.first_divergence =
                    "line " + std::to_string(c.line_number) + ": " + results[i].error;
            continue;
        }
        if (results[i].verdict == c.expected) {
            ++outcome.passed;
            log << "line " << c.line_number << ": PASS " << c.query->command << " -> "
                << results[i].verdict << "\n";
        } else {
            ++outcome.failed;
            log << "line " << c.line_number << ": FAIL " << c.query->command << " -> got '"
                << results[i].verdict << "', expected '" << c.expected << "'\n";
            if (outcome.first_divergence.empty())
                outcome.first_divergence = "line " + std::to_string(c.line_number) +
                                           ": got '" + results[i].verdict + "', expected '" +
                                           c.expected + "'";
        }
    }
    log << outcome.passed << "/" << outcome.total - outcome.errors << " cases passed";
    if (outcome.errors) log << ", " << outcome.errors << " malformed";
    log << "\n";
    if (!outcome.first_divergence.empty()) log << "first divergence: " << outcome.first_divergence << "\n";
    return outcome;
}

}  // namespace diffcert
