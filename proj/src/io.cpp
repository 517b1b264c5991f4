#include "hsc/io.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace hsc {

namespace {

// ---- lexing ----

struct Token {
    enum Kind { Word, Str, Punct, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip();
        Token t{Token::End, "", line_, col_};
        if (i_ >= s_.size()) return t;
        char c = s_[i_];
        if (c == '[' || c == ']' || c == '(' || c == ')' || c == ':' || c == ',') {
            t.kind = Token::Punct;
            t.text = std::string(1, c);
            bump();
            return t;
        }
        if (c == '"') {
            bump();
            t.kind = Token::Str;
            while (i_ < s_.size() && s_[i_] != '"' && s_[i_] != '\n') {
                t.text += s_[i_];
                bump();
            }
            if (i_ >= s_.size() || s_[i_] != '"')
                throw ParseError(t.line, t.col, "unterminated string");
            bump();
            return t;
        }
        if (is_word_char(c)) {
            t.kind = Token::Word;
            while (i_ < s_.size() && is_word_char(s_[i_])) {
                t.text += s_[i_];
                bump();
            }
            return t;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

  private:
    static bool is_word_char(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']' && c != '(' &&
               c != ')' && c != ':' && c != ',' && c != '"' && c != '#';
    }

    void bump() {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                return;
            }
        }
    }

    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
};

// ---- raw (pre-semantic) form ----

struct RawTuple {
    std::vector<int> idx;
    std::string coeff;
    int line, col;
};

struct RawRecord {
    std::string name;
    int line = 0, col = 0;
    std::map<std::string, std::string> words;                 // kind, field, over, left, right
    std::map<std::string, int> ints;                          // dim, rows, cols
    std::optional<std::vector<std::string>> basis;
    std::map<std::string, std::vector<RawTuple>> maps;
};

const std::set<std::string> kWordKeys = {"kind", "field", "over", "left", "right"};
const std::set<std::string> kIntKeys = {"dim", "rows", "cols"};
const std::set<std::string> kMapKeys = {"comul", "mul",       "unit",       "counit", "antipode",
                                        "action", "coaction_l", "coaction_r", "xi_HC"};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) { bump(); }

    std::vector<RawRecord> run() {
        expect_word("hsc");
        expect_word("v1");
        std::vector<RawRecord> out;
        while (cur_.kind != Token::End) out.push_back(record());
        return out;
    }

  private:
    void bump() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(cur_.line, cur_.col, msg); }

    void expect_word(const std::string& w) {
        if (cur_.kind != Token::Word || cur_.text != w) fail("expected '" + w + "'");
        bump();
    }

    void expect_punct(char c) {
        if (cur_.kind != Token::Punct || cur_.text[0] != c)
            fail(std::string("expected '") + c + "'");
        bump();
    }

    std::string word(const std::string& what) {
        if (cur_.kind != Token::Word) fail("expected " + what);
        std::string w = cur_.text;
        bump();
        return w;
    }

    int integer(const std::string& what) {
        if (cur_.kind != Token::Word || cur_.text.empty() ||
            cur_.text.find_first_not_of("0123456789") != std::string::npos || cur_.text.size() > 9)
            fail("expected a small nonnegative integer for " + what);
        int v = std::stoi(cur_.text);
        bump();
        return v;
    }

    RawRecord record() {
        RawRecord r;
        r.line = cur_.line;
        r.col = cur_.col;
        expect_word("begin");
        r.name = word("a record name");
        while (!(cur_.kind == Token::Word && cur_.text == "end")) {
            if (cur_.kind == Token::End) fail("unexpected end of input inside record");
            entry(r);
        }
        bump();  // end
        return r;
    }

    void entry(RawRecord& r) {
        Token key_tok = cur_;
        std::string key = word("a key");
        expect_punct(':');
        bool dup = false;
        if (kWordKeys.count(key)) {
            dup = r.words.count(key) > 0;
            r.words[key] = word("a value for " + key);
        } else if (kIntKeys.count(key)) {
            dup = r.ints.count(key) > 0;
            r.ints[key] = integer(key);
        } else if (key == "basis") {
            dup = r.basis.has_value();
            r.basis = labels();
        } else if (kMapKeys.count(key)) {
            dup = r.maps.count(key) > 0;
            r.maps[key] = tuples();
        } else {
            throw ParseError(key_tok.line, key_tok.col, "unknown key '" + key + "'");
        }
        if (dup) throw ParseError(key_tok.line, key_tok.col, "duplicate key '" + key + "'");
    }

    std::vector<std::string> labels() {
        expect_punct('[');
        std::vector<std::string> out;
        while (!(cur_.kind == Token::Punct && cur_.text == "]")) {
            if (!out.empty()) expect_punct(',');
            if (cur_.kind != Token::Str && cur_.kind != Token::Word) fail("expected a basis label");
            out.push_back(cur_.text);
            bump();
        }
        bump();  // ]
        return out;
    }

    std::vector<RawTuple> tuples() {
        expect_punct('[');
        std::vector<RawTuple> out;
        while (!(cur_.kind == Token::Punct && cur_.text == "]")) {
            if (!out.empty()) expect_punct(',');
            RawTuple t;
            t.line = cur_.line;
            t.col = cur_.col;
            expect_punct('(');
            for (;;) {
                if (cur_.kind == Token::Str) {
                    t.coeff = cur_.text;
                    bump();
                    break;
                }
                t.idx.push_back(integer("a tuple index"));
                expect_punct(',');
            }
            expect_punct(')');
            out.push_back(std::move(t));
        }
        bump();  // ]
        return out;
    }

    Lexer lex_;
    Token cur_;
};

// ---- semantic construction ----

struct MapShape {
    std::string key;
    std::vector<int> out_dims;
    std::vector<int> in_dims;
};

[[noreturn]] void sem(const std::string& path, const std::string& msg) {
    throw SemanticError(path, msg);
}

int dim_product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) p *= d;
    return p;
}

LinearMap build_map(const Field& f, const std::string& path, const RawRecord& r,
                    const MapShape& shape) {
    auto it = r.maps.find(shape.key);
    if (it == r.maps.end()) sem(path + "." + shape.key, "missing map");
    std::vector<Entry> es;
    const size_t arity = shape.out_dims.size() + shape.in_dims.size();
    for (const RawTuple& t : it->second) {
        if (t.idx.size() != arity)
            sem(path + "." + shape.key,
                "tuple has " + std::to_string(t.idx.size()) + " indices, expected " +
                    std::to_string(arity));
        int row = 0, col = 0;
        for (size_t k = 0; k < shape.out_dims.size(); ++k) {
            if (t.idx[k] < 0 || t.idx[k] >= shape.out_dims[k])
                sem(path + "." + shape.key, "output index out of range");
            row = row * shape.out_dims[k] + t.idx[k];
        }
        for (size_t k = 0; k < shape.in_dims.size(); ++k) {
            int v = t.idx[shape.out_dims.size() + k];
            if (v < 0 || v >= shape.in_dims[k]) sem(path + "." + shape.key, "input index out of range");
            col = col * shape.in_dims[k] + v;
        }
        Scalar c = Scalar::zero(f);
        try {
            c = Scalar::parse(f, t.coeff);
        } catch (const SemanticError& e) {
            sem(path + "." + shape.key, e.what());
        }
        es.push_back({row, col, c});
    }
    return LinearMap(f, dim_product(shape.out_dims), dim_product(shape.in_dims), std::move(es));
}

class Builder {
  public:
    Document run(const std::vector<RawRecord>& raws) {
        for (const RawRecord& r : raws) build(r);
        return std::move(doc_);
    }

  private:
    Document doc_;

    const Record& resolve(const RawRecord& r, const std::string& key) {
        auto it = r.words.find(key);
        if (it == r.words.end()) sem(r.name + "." + key, "missing reference");
        if (!doc_.has(it->second))
            sem(r.name + "." + key, "unknown record '" + it->second + "'");
        return doc_.find(it->second);
    }

    static Algebra algebra_of(const Record& rec, const std::string& path) {
        if (auto* a = std::get_if<Algebra>(&rec.value)) return *a;
        if (auto* b = std::get_if<Bialgebra>(&rec.value)) return b->alg;
        if (auto* h = std::get_if<HopfAlgebra>(&rec.value)) return h->bialg.alg;
        sem(path, "record '" + rec.name + "' has no algebra structure");
    }

    static ModuleCoalgebra module_coalgebra_of(const Record& rec, const std::string& path) {
        if (auto* m = std::get_if<ModuleCoalgebra>(&rec.value)) return *m;
        sem(path, "record '" + rec.name + "' is not a module_coalgebra");
    }

    int dim_of(const RawRecord& r, const std::string& key) {
        auto it = r.ints.find(key);
        if (it == r.ints.end()) sem(r.name + "." + key, "missing");
        return it->second;
    }

    std::vector<std::string> basis_of(const RawRecord& r, int dim) {
        if (!r.basis) return default_basis(dim);
        if (static_cast<int>(r.basis->size()) != dim)
            sem(r.name + ".basis", "has " + std::to_string(r.basis->size()) +
                                       " labels, dim is " + std::to_string(dim));
        return *r.basis;
    }

    Field field_of(const RawRecord& r) {
        auto it = r.words.find("field");
        if (it == r.words.end()) sem(r.name + ".field", "missing");
        const std::string& t = it->second;
        if (t == "Q") return Field::rationals();
        if (t.size() >= 2 && t[0] == 'F' &&
            t.find_first_not_of("0123456789", 1) == std::string::npos && t.size() <= 11) {
            try {
                return Field::prime(std::stoll(t.substr(1)));
            } catch (const SemanticError&) {
                sem(r.name + ".field", "NonPrimeField: " + t);
            }
        }
        sem(r.name + ".field", "unknown field '" + t + "'");
    }

    void check_field(const RawRecord& r, const Field& f, const Record& ref) {
        Field rf = std::visit(
            [](const auto& v) -> Field {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, XiBlock>)
                    return v.matrix.field();
                else if constexpr (std::is_same_v<T, Coalgebra>)
                    return v.field;
                else if constexpr (std::is_same_v<T, Algebra>)
                    return v.field;
                else if constexpr (std::is_same_v<T, Bialgebra>)
                    return v.field();
                else if constexpr (std::is_same_v<T, HopfAlgebra>)
                    return v.bialg.field();
                else if constexpr (std::is_same_v<T, RightComodule>)
                    return v.over.field;
                else if constexpr (std::is_same_v<T, LeftComodule>)
                    return v.over.field;
                else if constexpr (std::is_same_v<T, LeftModule>)
                    return v.over.field;
                else if constexpr (std::is_same_v<T, ModuleCoalgebra>)
                    return v.field();
                else if constexpr (std::is_same_v<T, EquivariantBicomodule>)
                    return v.H.field();
                else
                    return v.H.field();
            },
            ref.value);
        if (rf != f) sem(r.name + ".field", "differs from record '" + ref.name + "'");
    }

    void build(const RawRecord& r) {
        if (doc_.has(r.name)) sem(r.name, "duplicate record name");
        auto kind_it = r.words.find("kind");
        if (kind_it == r.words.end()) sem(r.name + ".kind", "missing");
        const std::string& kind = kind_it->second;
        Field f = field_of(r);
        std::optional<RecordValue> value;
        std::map<std::string, std::string> refs;
        for (const char* k : {"over", "left", "right"})
            if (r.words.count(k)) refs[k] = r.words.at(k);

        auto coalgebra_maps = [&](int n) {
            LinearMap comul = build_map(f, r.name, r, {"comul", {n, n}, {n}});
            LinearMap counit = build_map(f, r.name, r, {"counit", {}, {n}});
            return std::make_pair(comul, counit);
        };
        auto algebra_maps = [&](int n) {
            LinearMap mul = build_map(f, r.name, r, {"mul", {n}, {n, n}});
            LinearMap unit = build_map(f, r.name, r, {"unit", {n}, {}});
            return std::make_pair(mul, unit);
        };

        if (kind == "coalgebra") {
            int n = dim_of(r, "dim");
            auto [comul, counit] = coalgebra_maps(n);
            value = Coalgebra{f, n, comul, counit, basis_of(r, n)};
        } else if (kind == "algebra") {
            int n = dim_of(r, "dim");
            auto [mul, unit] = algebra_maps(n);
            value = Algebra{f, n, mul, unit, basis_of(r, n)};
        } else if (kind == "bialgebra" || kind == "hopf") {
            int n = dim_of(r, "dim");
            auto [comul, counit] = coalgebra_maps(n);
            auto [mul, unit] = algebra_maps(n);
            std::vector<std::string> basis = basis_of(r, n);
            Bialgebra b{Coalgebra{f, n, comul, counit, basis}, Algebra{f, n, mul, unit, basis}};
            if (kind == "hopf")
                value = HopfAlgebra{b, build_map(f, r.name, r, {"antipode", {n}, {n}})};
            else
                value = b;
        } else if (kind == "comodule_r" || kind == "comodule_l") {
            const Record& over = resolve(r, "over");
            check_field(r, f, over);
            Coalgebra c = coalgebra_of(over);
            int d = dim_of(r, "dim");
            if (kind == "comodule_r")
                value = RightComodule{c, d,
                                          build_map(f, r.name, r,
                                                    {"coaction_r", {d, c.dim}, {d}}),
                                          basis_of(r, d)};
            else
                value = LeftComodule{c, d,
                                         build_map(f, r.name, r, {"coaction_l", {c.dim, d}, {d}}),
                                         basis_of(r, d)};
        } else if (kind == "module_l") {
            const Record& over = resolve(r, "over");
            check_field(r, f, over);
            Algebra a = algebra_of(over, r.name + ".over");
            int d = dim_of(r, "dim");
            value = LeftModule{a, d, build_map(f, r.name, r, {"action", {d}, {a.dim, d}}),
                                   basis_of(r, d)};
        } else if (kind == "module_coalgebra") {
            const Record& over = resolve(r, "over");
            check_field(r, f, over);
            Bialgebra h = bialgebra_of(over);
            int n = dim_of(r, "dim");
            auto [comul, counit] = coalgebra_maps(n);
            value = ModuleCoalgebra{h, Coalgebra{f, n, comul, counit, basis_of(r, n)},
                                        build_map(f, r.name, r, {"action", {n}, {h.dim(), n}})};
        } else if (kind == "equivariant_bicomodule") {
            const Record& over = resolve(r, "over");
            check_field(r, f, over);
            Bialgebra h = bialgebra_of(over);
            ModuleCoalgebra c = module_coalgebra_of(resolve(r, "left"), r.name + ".left");
            ModuleCoalgebra dd = module_coalgebra_of(resolve(r, "right"), r.name + ".right");
            int d = dim_of(r, "dim");
            value = EquivariantBicomodule{
                h, c, dd, d,
                build_map(f, r.name, r, {"coaction_l", {c.dim(), d}, {d}}),
                build_map(f, r.name, r, {"coaction_r", {d, dd.dim()}, {d}}),
                build_map(f, r.name, r, {"action", {d}, {h.dim(), d}}), basis_of(r, d)};
        } else if (kind == "yd_module") {
            const Record& over = resolve(r, "over");
            check_field(r, f, over);
            Bialgebra h = bialgebra_of(over);
            ModuleCoalgebra lc = module_coalgebra_of(resolve(r, "left"), r.name + ".left");
            ModuleCoalgebra rc = module_coalgebra_of(resolve(r, "right"), r.name + ".right");
            if (lc.coalg.comul != rc.coalg.comul || lc.coalg.counit != rc.coalg.counit)
                sem(r.name + ".right", "left and right module coalgebras carry different coalgebras");
            // the right record stores <| with the acting leg first; flip it
            LinearMap ract = rc.action.compose(LinearMap::swap_legs(f, lc.dim(), h.dim()));
            BimoduleCoalgebra c{h, h, lc.coalg, lc.action, ract};
            int d = dim_of(r, "dim");
            value = YDModule{h, c, d,
                                 build_map(f, r.name, r, {"action", {d}, {d, h.dim()}}),
                                 build_map(f, r.name, r, {"coaction_r", {d, lc.dim()}, {d}}),
                                 basis_of(r, d)};
        } else if (kind == "xi_block") {
            const Record& over = resolve(r, "over");
            check_field(r, f, over);
            int rows = dim_of(r, "rows");
            int cols = dim_of(r, "cols");
            value = XiBlock{build_map(f, r.name, r, {"xi_HC", {rows}, {cols}})};
        } else {
            sem(r.name + ".kind", "unknown kind '" + kind + "'");
        }

        // reject keys that the kind does not use
        static const std::map<std::string, std::set<std::string>> allowed = {
            {"coalgebra", {"comul", "counit"}},
            {"algebra", {"mul", "unit"}},
            {"bialgebra", {"comul", "counit", "mul", "unit"}},
            {"hopf", {"comul", "counit", "mul", "unit", "antipode"}},
            {"comodule_r", {"coaction_r"}},
            {"comodule_l", {"coaction_l"}},
            {"module_l", {"action"}},
            {"module_coalgebra", {"comul", "counit", "action"}},
            {"equivariant_bicomodule", {"coaction_l", "coaction_r", "action"}},
            {"yd_module", {"coaction_r", "action"}},
            {"xi_block", {"xi_HC"}},
        };
        for (const auto& [key, tuples] : r.maps)
            if (!allowed.at(kind).count(key))
                sem(r.name + "." + key, "key not used by kind '" + kind + "'");

        doc_.records.push_back(Record{r.name, kind, std::move(refs), std::move(*value)});
    }
};

// ---- serialization ----

void emit_map(std::ostringstream& out, const std::string& key, const LinearMap& m,
              const std::vector<int>& out_dims, const std::vector<int>& in_dims) {
    // tuples sorted lexicographically; entries are already sorted by
    // (row, col), and the mixed-radix index order coincides with that
    out << key << ": [";
    bool first = true;
    for (const Entry& e : m.entries()) {
        if (!first) out << ", ";
        first = false;
        out << "(";
        std::vector<int> idx(out_dims.size() + in_dims.size());
        int row = e.row;
        for (size_t k = out_dims.size(); k-- > 0;) {
            idx[k] = row % out_dims[k];
            row /= out_dims[k];
        }
        int col = e.col;
        for (size_t k = in_dims.size(); k-- > 0;) {
            idx[out_dims.size() + k] = col % in_dims[k];
            col /= in_dims[k];
        }
        for (int v : idx) out << v << ", ";
        out << '"' << e.value.str() << "\")";
    }
    out << "]\n";
}

void emit_basis(std::ostringstream& out, const std::vector<std::string>& basis) {
    out << "basis: [";
    for (size_t i = 0; i < basis.size(); ++i) out << (i ? ", " : "") << '"' << basis[i] << '"';
    out << "]\n";
}

void emit_refs(std::ostringstream& out, const Record& r) {
    for (const char* k : {"over", "left", "right"}) {
        auto it = r.refs.find(k);
        if (it != r.refs.end()) out << k << ": " << it->second << "\n";
    }
}

}  // namespace

const Record& Document::find(const std::string& name) const {
    for (const Record& r : records)
        if (r.name == name) return r;
    throw SemanticError(name, "no such record");
}

bool Document::has(const std::string& name) const {
    for (const Record& r : records)
        if (r.name == name) return true;
    return false;
}

Document parse_document(const std::string& text) {
    return Builder().run(Parser(text).run());
}

std::string serialize(const Document& doc) {
    std::ostringstream out;
    out << "hsc v1\n";
    for (const Record& r : doc.records) {
        out << "\nbegin " << r.name << "\n";
        out << "kind: " << r.kind << "\n";
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Coalgebra>) {
                    out << "field: " << v.field.name() << "\ndim: " << v.dim << "\n";
                    emit_basis(out, v.basis);
                    emit_map(out, "comul", v.comul, {v.dim, v.dim}, {v.dim});
                    emit_map(out, "counit", v.counit, {}, {v.dim});
                } else if constexpr (std::is_same_v<T, Algebra>) {
                    out << "field: " << v.field.name() << "\ndim: " << v.dim << "\n";
                    emit_basis(out, v.basis);
                    emit_map(out, "mul", v.mul, {v.dim}, {v.dim, v.dim});
                    emit_map(out, "unit", v.unit, {v.dim}, {});
                } else if constexpr (std::is_same_v<T, Bialgebra> ||
                                     std::is_same_v<T, HopfAlgebra>) {
                    const Bialgebra& b = [&]() -> const Bialgebra& {
                        if constexpr (std::is_same_v<T, HopfAlgebra>)
                            return v.bialg;
                        else
                            return v;
                    }();
                    int n = b.dim();
                    out << "field: " << b.field().name() << "\ndim: " << n << "\n";
                    emit_basis(out, b.coalg.basis);
                    emit_map(out, "comul", b.comul(), {n, n}, {n});
                    emit_map(out, "counit", b.counit(), {}, {n});
                    emit_map(out, "mul", b.mul(), {n}, {n, n});
                    emit_map(out, "unit", b.unit(), {n}, {});
                    if constexpr (std::is_same_v<T, HopfAlgebra>)
                        emit_map(out, "antipode", v.antipode, {n}, {n});
                } else if constexpr (std::is_same_v<T, RightComodule>) {
                    out << "field: " << v.over.field.name() << "\ndim: " << v.dim << "\n";
                    emit_basis(out, v.basis);
                    emit_refs(out, r);
                    emit_map(out, "coaction_r", v.coaction, {v.dim, v.over.dim}, {v.dim});
                } else if constexpr (std::is_same_v<T, LeftComodule>) {
                    out << "field: " << v.over.field.name() << "\ndim: " << v.dim << "\n";
                    emit_basis(out, v.basis);
                    emit_refs(out, r);
                    emit_map(out, "coaction_l", v.coaction, {v.over.dim, v.dim}, {v.dim});
                } else if constexpr (std::is_same_v<T, LeftModule>) {
                    out << "field: " << v.over.field.name() << "\ndim: " << v.dim << "\n";
                    emit_basis(out, v.basis);
                    emit_refs(out, r);
                    emit_map(out, "action", v.action, {v.dim}, {v.over.dim, v.dim});
                } else if constexpr (std::is_same_v<T, ModuleCoalgebra>) {
                    int n = v.dim();
                    out << "field: " << v.field().name() << "\ndim: " << n << "\n";
                    emit_basis(out, v.coalg.basis);
                    emit_refs(out, r);
                    emit_map(out, "comul", v.coalg.comul, {n, n}, {n});
                    emit_map(out, "counit", v.coalg.counit, {}, {n});
                    emit_map(out, "action", v.action, {n}, {v.over.dim(), n});
                } else if constexpr (std::is_same_v<T, EquivariantBicomodule>) {
                    out << "field: " << v.H.field().name() << "\ndim: " << v.dim << "\n";
                    emit_basis(out, v.basis);
                    emit_refs(out, r);
                    emit_map(out, "coaction_l", v.left_coaction, {v.C.dim(), v.dim}, {v.dim});
                    emit_map(out, "coaction_r", v.right_coaction, {v.dim, v.D.dim()}, {v.dim});
                    emit_map(out, "action", v.action, {v.dim}, {v.H.dim(), v.dim});
                } else if constexpr (std::is_same_v<T, YDModule>) {
                    out << "field: " << v.H.field().name() << "\ndim: " << v.dim << "\n";
                    emit_basis(out, v.basis);
                    emit_refs(out, r);
                    emit_map(out, "coaction_r", v.coaction, {v.dim, v.C.coalg.dim}, {v.dim});
                    emit_map(out, "action", v.action, {v.dim}, {v.dim, v.H.dim()});
                } else {  // XiBlock
                    out << "field: " << v.matrix.field().name() << "\n";
                    out << "rows: " << v.matrix.rows() << "\ncols: " << v.matrix.cols() << "\n";
                    emit_refs(out, r);
                    emit_map(out, "xi_HC", v.matrix, {v.matrix.rows()}, {v.matrix.cols()});
                }
            },
            r.value);
        out << "end\n";
    }
    return out.str();
}

Coalgebra coalgebra_of(const Record& r) {
    if (auto* c = std::get_if<Coalgebra>(&r.value)) return *c;
    if (auto* b = std::get_if<Bialgebra>(&r.value)) return b->coalg;
    if (auto* h = std::get_if<HopfAlgebra>(&r.value)) return h->bialg.coalg;
    if (auto* m = std::get_if<ModuleCoalgebra>(&r.value)) return m->coalg;
    throw SemanticError(r.name, "record has no coalgebra structure");
}

Bialgebra bialgebra_of(const Record& r) {
    if (auto* b = std::get_if<Bialgebra>(&r.value)) return *b;
    if (auto* h = std::get_if<HopfAlgebra>(&r.value)) return h->bialg;
    throw SemanticError(r.name, "record has no bialgebra structure");
}

CheckReport check_record(const Record& r) {
    return std::visit(
        [](const auto& v) -> CheckReport {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Coalgebra>) return check_coalgebra(v);
            else if constexpr (std::is_same_v<T, Algebra>) return check_algebra(v);
            else if constexpr (std::is_same_v<T, Bialgebra>) return check_bialgebra(v);
            else if constexpr (std::is_same_v<T, HopfAlgebra>) return check_hopf(v);
            else if constexpr (std::is_same_v<T, RightComodule>) return check_comodule(v);
            else if constexpr (std::is_same_v<T, LeftComodule>) return check_comodule(v);
            else if constexpr (std::is_same_v<T, LeftModule>) return check_module(v);
            else if constexpr (std::is_same_v<T, ModuleCoalgebra>) return check_module_coalgebra(v);
            else if constexpr (std::is_same_v<T, EquivariantBicomodule>)
                return check_equivariant_bicomodule(v);
            else if constexpr (std::is_same_v<T, YDModule>) return check_yd(v);
            else {
                CheckReport rep;
                rep.add("stored_table", true, "no standalone axioms");
                return rep;
            }
        },
        r.value);
}

}  // namespace hsc
