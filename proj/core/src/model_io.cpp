#include "prefcore/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "prefcore/errors.hpp"

namespace prefcore {

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Cpnet: return "cpnet";
        case ModelKind::Cprnet: return "cprnet";
        case ModelKind::Lptree: return "lptree";
    }
    return "?";
}

namespace {

struct Tok {
    std::string text;
    int col = 0;  // 1-based start column
};

struct Line {
    int number = 0;  // 1-based
    std::vector<Tok> toks;
};

[[noreturn]] void fail(const std::string& msg, int line, int col) {
    throw Error(ErrorCode::ParseError, msg, line, col);
}

// Tokenizes into whitespace-separated words, except that the punctuation
// characters ':' ',' '>' '=' are always tokens of their own.
std::vector<Line> lex(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line;
        line.number = number;
        std::size_t i = 0;
        while (i < raw.size()) {
            char c = raw[i];
            if (c == '#') break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c == ':' || c == ',' || c == '>' || c == '=') {
                line.toks.push_back({std::string(1, c), static_cast<int>(i) + 1});
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size()) {
                char d = raw[i];
                if (std::isspace(static_cast<unsigned char>(d)) || d == ':' ||
                    d == ',' || d == '>' || d == '=' || d == '#')
                    break;
                ++i;
            }
            line.toks.push_back(
                {raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.toks.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

bool is_keyword(const std::string& t) {
    return t == "kind" || t == "var" || t == "cpt" || t == "ari" ||
           t == "node" || t == "constraints" || t == "if" || t == "iff" ||
           t == "table";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : lines_(lex(text)) {}

    ModelDocument run() {
        ModelDocument doc;
        doc.kind = parse_kind();
        parse_vars(doc);
        switch (doc.kind) {
            case ModelKind::Cpnet:
                doc.cpnet = CpNet::over(vars_, parse_cpts());
                break;
            case ModelKind::Cprnet: {
                auto cpts = parse_cpts();
                auto aris = parse_aris();
                doc.cprnet =
                    build_cprnet(CpNet::over(vars_, std::move(cpts)), aris);
                break;
            }
            case ModelKind::Lptree:
                doc.lptree = parse_lptree();
                break;
        }
        parse_constraints(doc);
        if (!at_end()) {
            const Tok& t = cur().toks[0];
            fail("unexpected directive '" + t.text + "'", cur().number, t.col);
        }
        return doc;
    }

  private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    VariableSetPtr vars_;

    bool at_end() const { return pos_ >= lines_.size(); }
    const Line& cur() const { return lines_[pos_]; }

    bool next_starts_with(const std::string& kw) const {
        return !at_end() && cur().toks[0].text == kw;
    }

    // True when the next line is a row of the current block: it starts with
    // something other than a directive keyword.
    bool next_is_row() const {
        return !at_end() && !is_keyword(cur().toks[0].text);
    }

    [[noreturn]] void fail_line(const Line& line, const std::string& msg,
                                std::size_t tok_index) const {
        int col = tok_index < line.toks.size()
                      ? line.toks[tok_index].col
                      : line.toks.back().col +
                            static_cast<int>(line.toks.back().text.size());
        fail(msg, line.number, col);
    }

    const Tok& want(const Line& line, std::size_t i,
                    const std::string& what) const {
        if (i >= line.toks.size())
            fail_line(line, "expected " + what, i);
        return line.toks[i];
    }

    void want_literal(const Line& line, std::size_t i,
                      const std::string& text) const {
        const Tok& t = want(line, i, "'" + text + "'");
        if (t.text != text)
            fail("expected '" + text + "', got '" + t.text + "'", line.number,
                 t.col);
    }

    void want_end(const Line& line, std::size_t i) const {
        if (i < line.toks.size())
            fail("unexpected trailing '" + line.toks[i].text + "'",
                 line.number, line.toks[i].col);
    }

    int var_of(const Line& line, std::size_t i) const {
        const Tok& t = want(line, i, "variable name");
        try {
            return vars_->var_index(t.text);
        } catch (const Error&) {
            fail("unknown variable '" + t.text + "'", line.number, t.col);
        }
    }

    std::uint8_t value_of(const Line& line, std::size_t i, int var) const {
        const Tok& t = want(line, i, "value of " + vars_->var(var).name);
        try {
            return static_cast<std::uint8_t>(vars_->value_index(var, t.text));
        } catch (const Error&) {
            fail("'" + t.text + "' is not a value of " + vars_->var(var).name,
                 line.number, t.col);
        }
    }

    ModelKind parse_kind() {
        if (at_end()) fail("empty document", 1, 1);
        const Line& line = cur();
        want_literal(line, 0, "kind");
        const Tok& t = want(line, 1, "model kind");
        want_end(line, 2);
        ++pos_;
        if (t.text == "cpnet") return ModelKind::Cpnet;
        if (t.text == "cprnet") return ModelKind::Cprnet;
        if (t.text == "lptree") return ModelKind::Lptree;
        fail("unknown model kind '" + t.text + "' (expected cpnet, cprnet, or lptree)",
             line.number, t.col);
    }

    void parse_vars(ModelDocument& doc) {
        std::vector<VariableSet::Variable> vars;
        while (next_starts_with("var")) {
            const Line& line = cur();
            VariableSet::Variable v;
            v.name = want(line, 1, "variable name").text;
            for (std::size_t i = 2; i < line.toks.size(); ++i)
                v.values.push_back(line.toks[i].text);
            if (v.values.empty())
                fail_line(line, "variable needs at least one value", 2);
            vars.push_back(std::move(v));
            ++pos_;
        }
        if (vars.empty()) {
            int ln = at_end() ? 1 : cur().number;
            fail("expected at least one 'var' line", ln, 1);
        }
        vars_ = std::make_shared<const VariableSet>(std::move(vars));
        doc.vars = vars_;
    }

    // --- conditional preference tables ---------------------------------

    PreferenceRow parse_row_spec(const Line& line, std::size_t i, int var) {
        int n = vars_->domain_size(var);
        if (i < line.toks.size() && line.toks[i].text == "partial") {
            ++i;
            std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
            bool first = true;
            while (i < line.toks.size()) {
                if (!first) {
                    want_literal(line, i, ",");
                    ++i;
                }
                std::uint8_t a = value_of(line, i, var);
                want_literal(line, i + 1, ">");
                std::uint8_t b = value_of(line, i + 2, var);
                pairs.emplace_back(a, b);
                i += 3;
                first = false;
            }
            try {
                return PreferenceRow::partial(n, pairs);
            } catch (const Error& e) {
                fail(e.what(), line.number, line.toks.back().col);
            }
        }
        std::vector<std::uint8_t> order;
        order.push_back(value_of(line, i, var));
        ++i;
        while (i < line.toks.size()) {
            want_literal(line, i, ">");
            order.push_back(value_of(line, i + 1, var));
            i += 2;
        }
        if (static_cast<int>(order.size()) != n)
            fail_line(line, "row must rank all " + std::to_string(n) +
                                " values of " + vars_->var(var).name,
                      line.toks.size());
        std::vector<bool> seen(n, false);
        for (std::uint8_t v : order) {
            if (seen[v])
                fail_line(line, "value repeated in row", line.toks.size());
            seen[v] = true;
        }
        return PreferenceRow::total(order);
    }

    // Parses `cpt X [: P...]` plus one row per parent context. Rows may be
    // listed in any order; each context must appear exactly once.
    Cpt parse_one_cpt() {
        const Line& head = cur();
        Cpt cpt;
        cpt.var = var_of(head, 1);
        std::size_t i = 2;
        if (i < head.toks.size()) {
            want_literal(head, i, ":");
            ++i;
            for (; i < head.toks.size(); ++i)
                cpt.parents.push_back(var_of(head, i));
        }
        ++pos_;

        std::size_t row_count = 1;
        for (int p : cpt.parents)
            row_count *= static_cast<std::size_t>(vars_->domain_size(p));
        cpt.rows.resize(row_count,
                        PreferenceRow::total(std::vector<std::uint8_t>{0}));
        std::vector<bool> filled(row_count, false);

        while (next_is_row()) {
            const Line& line = cur();
            // Context values, one per parent, then ':'.
            std::size_t idx = 0;
            std::size_t j = 0;
            for (std::size_t k = 0; k < cpt.parents.size(); ++k, ++j) {
                std::uint8_t v = value_of(line, j, cpt.parents[k]);
                idx = idx * static_cast<std::size_t>(
                                vars_->domain_size(cpt.parents[k])) +
                      v;
            }
            want_literal(line, j, ":");
            ++j;
            if (filled[idx])
                fail_line(line, "duplicate row for this parent context", 0);
            cpt.rows[idx] = parse_row_spec(line, j, cpt.var);
            filled[idx] = true;
            ++pos_;
        }
        for (std::size_t r = 0; r < row_count; ++r)
            if (!filled[r]) {
                int ln = at_end() ? lines_.back().number : cur().number;
                fail("table for " + vars_->var(cpt.var).name + " is missing " +
                         std::to_string(std::count(filled.begin(), filled.end(),
                                                   false)) +
                         " row(s)",
                     ln, 1);
            }
        return cpt;
    }

    std::vector<Cpt> parse_cpts() {
        std::vector<Cpt> cpts;
        while (next_starts_with("cpt")) cpts.push_back(parse_one_cpt());
        if (cpts.empty()) {
            int ln = at_end() ? lines_.back().number : cur().number;
            fail("expected at least one 'cpt' block", ln, 1);
        }
        return cpts;
    }

    std::vector<AriStatement> parse_aris() {
        std::vector<AriStatement> aris;
        while (next_starts_with("ari")) {
            const Line& line = cur();
            AriStatement a;
            a.more = var_of(line, 1);
            a.less = var_of(line, 2);
            want_end(line, 3);
            aris.push_back(a);
            ++pos_;
        }
        return aris;
    }

    // --- LP-trees -------------------------------------------------------

    LpTree parse_lptree() {
        struct Pending {
            std::unique_ptr<LpNode> node;
            bool has_parent = false;
            std::string parent_id;
            std::vector<std::uint8_t> labels;
            int line = 0;
        };
        std::map<std::string, Pending> nodes;
        std::vector<std::string> order;

        while (next_starts_with("node")) {
            const Line& head = cur();
            const Tok& id = want(head, 1, "node id");
            if (nodes.count(id.text))
                fail("duplicate node id '" + id.text + "'", head.number,
                     id.col);
            Pending p;
            p.line = head.number;
            p.node = std::make_unique<LpNode>();
            p.node->var = var_of(head, 2);
            std::size_t i = 3;
            std::size_t labels_at = 0;
            if (i < head.toks.size() && head.toks[i].text == "parent") {
                p.has_parent = true;
                p.parent_id = want(head, i + 1, "parent node id").text;
                want_literal(head, i + 2, "labels");
                i += 3;
                labels_at = i;
                while (i < head.toks.size() && head.toks[i].text != "scope")
                    ++i;
                if (i == labels_at)
                    fail_line(head, "expected at least one label value",
                              labels_at);
            }
            if (i < head.toks.size() && head.toks[i].text == "scope") {
                ++i;
                for (; i < head.toks.size(); ++i)
                    p.node->scope.push_back(var_of(head, i));
            }
            want_end(head, i);
            ++pos_;

            // Label values are values of the parent's variable, so the
            // parent must already be declared.
            if (p.has_parent) {
                auto parent_it = nodes.find(p.parent_id);
                if (parent_it == nodes.end())
                    fail("parent node '" + p.parent_id +
                             "' must be declared before its children",
                         head.number, head.toks[labels_at].col);
                int pvar = parent_it->second.node->var;
                for (std::size_t k = labels_at;
                     k < head.toks.size() && head.toks[k].text != "scope"; ++k)
                    p.labels.push_back(value_of(head, k, pvar));
                std::sort(p.labels.begin(), p.labels.end());
            }

            // Rows over the scope context.
            std::size_t row_count = 1;
            for (int s : p.node->scope)
                row_count *= static_cast<std::size_t>(vars_->domain_size(s));
            p.node->rows.resize(
                row_count, PreferenceRow::total(std::vector<std::uint8_t>{0}));
            std::vector<bool> filled(row_count, false);
            while (next_is_row()) {
                const Line& line = cur();
                std::size_t idx = 0;
                std::size_t j = 0;
                for (std::size_t k = 0; k < p.node->scope.size(); ++k, ++j) {
                    std::uint8_t v = value_of(line, j, p.node->scope[k]);
                    idx = idx * static_cast<std::size_t>(
                                    vars_->domain_size(p.node->scope[k])) +
                          v;
                }
                want_literal(line, j, ":");
                ++j;
                if (filled[idx])
                    fail_line(line, "duplicate row for this context", 0);
                p.node->rows[idx] = parse_row_spec(line, j, p.node->var);
                filled[idx] = true;
                ++pos_;
            }
            for (std::size_t r = 0; r < row_count; ++r)
                if (!filled[r])
                    fail("node '" + id.text + "' is missing preference rows",
                         head.number, head.toks[0].col);

            nodes.emplace(id.text, std::move(p));
            order.push_back(id.text);
        }
        if (order.empty()) {
            int ln = at_end() ? lines_.back().number : cur().number;
            fail("expected at least one 'node' block", ln, 1);
        }

        // Attach children to parents in declaration order; the remaining
        // parentless node is the root.
        std::string root_id;
        for (const auto& id : order) {
            Pending& p = nodes.at(id);
            if (!p.has_parent) {
                if (!root_id.empty())
                    fail("more than one root node ('" + root_id + "' and '" +
                             id + "')",
                         p.line, 1);
                root_id = id;
            }
        }
        if (root_id.empty())
            fail("no root node (every node has a parent)",
                 nodes.at(order[0]).line, 1);
        // Attaching moves a node's ownership into its parent, but the node
        // object itself stays put — later grandchildren reach it through the
        // raw pointer even after the unique_ptr slot has been emptied.
        std::map<std::string, LpNode*> placed;
        for (const auto& id : order) placed[id] = nodes.at(id).node.get();
        for (const auto& id : order) {
            Pending& p = nodes.at(id);
            if (!p.has_parent) continue;
            LpNode::Child child;
            child.labels = p.labels;
            child.node = std::move(p.node);
            placed.at(p.parent_id)->children.push_back(std::move(child));
        }
        return LpTree::over(vars_, std::move(nodes.at(root_id).node));
    }

    // --- constraints ----------------------------------------------------

    void parse_constraints(ModelDocument& doc) {
        bool present = false;
        if (next_starts_with("constraints")) {
            want_end(cur(), 1);
            present = true;
            ++pos_;
        }
        std::vector<Constraint> cs;
        while (next_starts_with("if") || next_starts_with("iff") ||
               next_starts_with("table")) {
            present = true;
            const Line& line = cur();
            const std::string& kw = line.toks[0].text;
            if (kw == "if")
                cs.push_back(parse_if(line));
            else if (kw == "iff")
                cs.push_back(parse_iff(line));
            else
                cs.push_back(parse_table(line));
            ++pos_;
        }
        if (!present) return;
        ConstraintSet set = ConstraintSet::empty(vars_);
        set.constraints = std::move(cs);
        validate(set);
        doc.constraints = std::move(set);
    }

    // `A = a1` at token i; returns (var, value, next index).
    std::tuple<int, std::uint8_t, std::size_t> parse_binding(const Line& line,
                                                             std::size_t i) {
        int var = var_of(line, i);
        want_literal(line, i + 1, "=");
        std::uint8_t val = value_of(line, i + 2, var);
        return {var, val, i + 3};
    }

    Constraint parse_if(const Line& line) {
        auto [x, xv, i] = parse_binding(line, 1);
        want_literal(line, i, "then");
        auto [y, yv, j] = parse_binding(line, i + 1);
        want_end(line, j);
        if (x == y) fail_line(line, "binary constraint repeats a variable", 1);
        Constraint c;
        c.scope = {x, y};
        for (int u = 0; u < vars_->domain_size(x); ++u)
            for (int v = 0; v < vars_->domain_size(y); ++v)
                if (!(u == xv && v != yv))
                    c.allowed.push_back({static_cast<std::uint8_t>(u),
                                         static_cast<std::uint8_t>(v)});
        return c;
    }

    Constraint parse_iff(const Line& line) {
        auto [x, xv, i] = parse_binding(line, 1);
        auto [y, yv, j] = parse_binding(line, i);
        want_end(line, j);
        if (x == y) fail_line(line, "binary constraint repeats a variable", 1);
        Constraint c;
        c.scope = {x, y};
        for (int u = 0; u < vars_->domain_size(x); ++u)
            for (int v = 0; v < vars_->domain_size(y); ++v)
                if ((u == xv) == (v == yv))
                    c.allowed.push_back({static_cast<std::uint8_t>(u),
                                         static_cast<std::uint8_t>(v)});
        return c;
    }

    Constraint parse_table(const Line& line) {
        Constraint c;
        std::size_t i = 1;
        while (i < line.toks.size() && line.toks[i].text != ":") {
            c.scope.push_back(var_of(line, i));
            ++i;
        }
        if (c.scope.empty())
            fail_line(line, "table constraint needs a scope", 1);
        want_literal(line, i, ":");
        ++i;
        bool first = true;
        while (i < line.toks.size()) {
            if (!first) {
                want_literal(line, i, ",");
                ++i;
            }
            std::vector<std::uint8_t> tuple;
            for (int v : c.scope) {
                tuple.push_back(value_of(line, i, v));
                ++i;
            }
            c.allowed.push_back(std::move(tuple));
            first = false;
        }
        return c;
    }
};

// --- printing -----------------------------------------------------------

void print_row(std::ostream& out, const VariableSet& vars, int var,
               const PreferenceRow& row) {
    if (row.is_total()) {
        bool first = true;
        for (std::uint8_t v : row.order()) {
            if (!first) out << " > ";
            out << vars.var(var).values[v];
            first = false;
        }
    } else {
        out << "partial";
        int n = vars.domain_size(var);
        bool first = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (row.prefers(static_cast<std::uint8_t>(a),
                                static_cast<std::uint8_t>(b))) {
                    out << (first ? " " : ", ") << vars.var(var).values[a]
                        << " > " << vars.var(var).values[b];
                    first = false;
                }
    }
    out << "\n";
}

void print_cpt(std::ostream& out, const VariableSet& vars, const Cpt& cpt) {
    out << "cpt " << vars.var(cpt.var).name;
    if (!cpt.parents.empty()) {
        out << " :";
        for (int p : cpt.parents) out << " " << vars.var(p).name;
    }
    out << "\n";
    std::vector<std::uint8_t> ctx(cpt.parents.size(), 0);
    for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
        for (std::size_t k = 0; k < cpt.parents.size(); ++k)
            out << vars.var(cpt.parents[k]).values[ctx[k]] << " ";
        out << ": ";
        print_row(out, vars, cpt.var, cpt.rows[r]);
        for (std::size_t k = ctx.size(); k-- > 0;) {
            if (++ctx[k] < vars.domain_size(cpt.parents[k])) break;
            ctx[k] = 0;
        }
    }
}

void print_lp_node(std::ostream& out, const VariableSet& vars,
                   const LpNode& node, int& next_id, int parent_id,
                   int parent_var, const std::vector<std::uint8_t>* labels) {
    int id = next_id++;
    out << "node " << id << " " << vars.var(node.var).name;
    if (labels) {
        out << " parent " << parent_id << " labels";
        for (std::uint8_t v : *labels)
            out << " " << vars.var(parent_var).values[v];
    }
    if (!node.scope.empty()) {
        out << " scope";
        for (int s : node.scope) out << " " << vars.var(s).name;
    }
    out << "\n";
    std::vector<std::uint8_t> ctx(node.scope.size(), 0);
    for (std::size_t r = 0; r < node.rows.size(); ++r) {
        for (std::size_t k = 0; k < node.scope.size(); ++k)
            out << vars.var(node.scope[k]).values[ctx[k]] << " ";
        out << ": ";
        print_row(out, vars, node.var, node.rows[r]);
        for (std::size_t k = ctx.size(); k-- > 0;) {
            if (++ctx[k] < vars.domain_size(node.scope[k])) break;
            ctx[k] = 0;
        }
    }
    for (const auto& child : node.children)
        print_lp_node(out, vars, *child.node, next_id, id, node.var,
                      &child.labels);
}

}  // namespace

std::string print_model(const ModelDocument& doc) {
    const VariableSet& vars = *doc.vars;
    std::ostringstream out;
    out << "kind " << model_kind_name(doc.kind) << "\n";
    for (int i = 0; i < vars.size(); ++i) {
        out << "var " << vars.var(i).name;
        for (const auto& val : vars.var(i).values) out << " " << val;
        out << "\n";
    }
    if (doc.kind == ModelKind::Cpnet || doc.kind == ModelKind::Cprnet) {
        const CpNet& net =
            doc.kind == ModelKind::Cpnet ? *doc.cpnet : doc.cprnet->base;
        for (int x : net.topo) print_cpt(out, vars, net.cpts[x]);
        if (doc.kind == ModelKind::Cprnet)
            for (const auto& a : doc.cprnet->aris)
                out << "ari " << vars.var(a.more).name << " "
                    << vars.var(a.less).name << "\n";
    } else {
        int next_id = 1;
        print_lp_node(out, vars, *doc.lptree->root, next_id, 0, -1, nullptr);
    }
    if (doc.constraints) {
        out << "constraints\n";
        for (const auto& c : doc.constraints->constraints) {
            out << "table";
            for (int v : c.scope) out << " " << vars.var(v).name;
            out << " :";
            bool first = true;
            for (const auto& tuple : c.allowed) {
                out << (first ? " " : " , ");
                bool inner = true;
                for (std::size_t k = 0; k < c.scope.size(); ++k) {
                    if (!inner) out << " ";
                    out << vars.var(c.scope[k]).values[tuple[k]];
                    inner = false;
                }
                first = false;
            }
            out << "\n";
        }
    }
    return out.str();
}

ModelDocument parse_model(const std::string& text) {
    return Parser(text).run();
}

namespace {

bool cpt_equal(const Cpt& a, const Cpt& b) {
    return a.var == b.var && a.parents == b.parents && a.rows == b.rows;
}

bool cpnet_equal(const CpNet& a, const CpNet& b) {
    if (!(*a.vars == *b.vars) || a.active != b.active || a.topo != b.topo)
        return false;
    for (std::size_t i = 0; i < a.cpts.size(); ++i) {
        if (a.is_active(static_cast<int>(i)) !=
            b.is_active(static_cast<int>(i)))
            return false;
        if (a.is_active(static_cast<int>(i)) &&
            !cpt_equal(a.cpts[i], b.cpts[i]))
            return false;
    }
    return a.context == b.context;
}

bool constraints_equal(const ConstraintSet& a, const ConstraintSet& b) {
    if (!(*a.vars == *b.vars)) return false;
    if (!(a.fixed == b.fixed)) return false;
    if (a.constraints.size() != b.constraints.size()) return false;
    for (std::size_t i = 0; i < a.constraints.size(); ++i)
        if (a.constraints[i].scope != b.constraints[i].scope ||
            a.constraints[i].allowed != b.constraints[i].allowed)
            return false;
    return true;
}

}  // namespace

bool document_equal(const ModelDocument& a, const ModelDocument& b) {
    if (a.kind != b.kind || !(*a.vars == *b.vars)) return false;
    switch (a.kind) {
        case ModelKind::Cpnet:
            if (!cpnet_equal(*a.cpnet, *b.cpnet)) return false;
            break;
        case ModelKind::Cprnet: {
            if (!cpnet_equal(a.cprnet->base, b.cprnet->base)) return false;
            const auto& x = a.cprnet->aris;
            const auto& y = b.cprnet->aris;
            if (x.size() != y.size()) return false;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!(x[i] == y[i])) return false;
            if (a.cprnet->topo != b.cprnet->topo) return false;
            break;
        }
        case ModelKind::Lptree:
            if (!tree_equal(*a.lptree, *b.lptree)) return false;
            break;
    }
    if (a.constraints.has_value() != b.constraints.has_value()) return false;
    if (a.constraints && !constraints_equal(*a.constraints, *b.constraints))
        return false;
    return true;
}

}  // namespace prefcore
