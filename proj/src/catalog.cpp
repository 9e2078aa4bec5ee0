#include "qlogic/catalog.hpp"

#include "qlogic/error.hpp"

#include <cctype>

namespace qlogic::catalog {

namespace {

using K = Error::Kind;

void check_range(std::string_view name, int value, int lo, int hi) {
    if (value < lo || value > hi) {
        throw Error(K::BoundExceeded, std::string(name) + " parameter must lie in [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "], got " + std::to_string(value));
    }
}

struct TableBuilder {
    RawTable raw;

    explicit TableBuilder(std::vector<std::string> labels) {
        raw.sums.assign(labels.size() * labels.size(), kUndefined);
        raw.labels = std::move(labels);
    }
    void define(ElementId a, ElementId b, ElementId c) {
        raw.set(a, b, c);
        raw.set(b, a, c);
    }
    void zero_laws() {
        for (ElementId p = 0; p < raw.size(); ++p) define(raw.zero, p, p);
    }
    EffectAlgebra finish() const { return validate(raw); }
};

}  // namespace

EffectAlgebra boolean_powerset(int k) {
    check_range("boolean_powerset", k, 1, 5);
    const ElementId n = ElementId{1} << k;
    std::vector<std::string> labels(n);
    for (ElementId s = 0; s < n; ++s) {
        if (s == 0) {
            labels[s] = "0";
        } else if (s == n - 1) {
            labels[s] = "1";
        } else {
            std::string text = "{";
            for (int i = 0; i < k; ++i) {
                if (!(s >> i & 1U)) continue;
                if (text.size() > 1) text += ",";
                text += std::to_string(i + 1);
            }
            labels[s] = text + "}";
        }
    }
    TableBuilder t(std::move(labels));
    t.raw.zero = 0;
    t.raw.unit = n - 1;
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
            if ((a & b) == 0) t.raw.set(a, b, a | b);
        }
    }
    return t.finish();
}

EffectAlgebra chain(int D) {
    check_range("chain", D, 1, 12);
    std::vector<std::string> labels;
    for (int i = 0; i <= D; ++i) {
        labels.push_back(i == 0 ? "0" : i == D ? "1" : std::to_string(i) + "/" + std::to_string(D));
    }
    TableBuilder t(std::move(labels));
    t.raw.zero = 0;
    t.raw.unit = static_cast<ElementId>(D);
    for (int a = 0; a <= D; ++a) {
        for (int b = 0; a + b <= D; ++b) t.raw.set(a, b, a + b);
    }
    return t.finish();
}

EffectAlgebra mo(int n) {
    check_range("mo", n, 1, 6);
    std::vector<std::string> labels{"0"};
    for (int i = 1; i <= n; ++i) {
        labels.push_back("a" + std::to_string(i));
        labels.push_back("a" + std::to_string(i) + "'");
    }
    labels.push_back("1");
    TableBuilder t(std::move(labels));
    t.raw.zero = 0;
    t.raw.unit = t.raw.size() - 1;
    t.zero_laws();
    for (int i = 0; i < n; ++i) t.define(1 + 2 * i, 2 + 2 * i, t.raw.unit);
    return t.finish();
}

EffectAlgebra wright_triangle() {
    // Blocks {a,b,c}, {c,d,e}, {e,f,a}. Coatoms are the supplements of the atoms.
    const std::vector<std::string> labels{"0", "a", "b", "c", "d", "e", "f",
                                          "a'", "b'", "c'", "d'", "e'", "f'", "1"};
    const std::vector<std::array<std::string, 3>> block_sums{
        {"a", "b", "c'"}, {"a", "c", "b'"}, {"b", "c", "a'"},
        {"c", "d", "e'"}, {"c", "e", "d'"}, {"d", "e", "c'"},
        {"e", "f", "a'"}, {"e", "a", "f'"}, {"f", "a", "e'"},
        {"a", "a'", "1"}, {"b", "b'", "1"}, {"c", "c'", "1"},
        {"d", "d'", "1"}, {"e", "e'", "1"}, {"f", "f'", "1"},
    };
    std::vector<std::array<std::string, 3>> triples = block_sums;
    for (const auto &p : labels) triples.push_back({"0", p, p});
    return validate(RawTable::from_triples(labels, "0", "1", triples));
}

EffectAlgebra horizontal_sum(const std::vector<EffectAlgebra> &parts) {
    if (parts.empty()) throw Error(K::Malformed, "horizontal_sum needs at least one component");
    std::size_t total = 2;
    for (const auto &p : parts) total += p.size() - 2;
    if (total > kHardSizeCap) {
        throw Error(K::BoundExceeded, "horizontal sum would have " + std::to_string(total) + " elements");
    }
    std::vector<std::string> labels{"0"};
    std::vector<std::vector<ElementId>> maps;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto &part = parts[i];
        std::vector<ElementId> map(part.size());
        for (ElementId p = 0; p < part.size(); ++p) {
            if (p == part.zero() || p == part.unit()) continue;
            map[p] = labels.size();
            labels.push_back("s" + std::to_string(i + 1) + "." + part.label(p));
        }
        maps.push_back(std::move(map));
    }
    labels.push_back("1");
    TableBuilder t(std::move(labels));
    t.raw.zero = 0;
    t.raw.unit = total - 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto &part = parts[i];
        auto &map = maps[i];
        map[part.zero()] = t.raw.zero;
        map[part.unit()] = t.raw.unit;
        for (ElementId a = 0; a < part.size(); ++a) {
            for (ElementId b = 0; b < part.size(); ++b) {
                if (ElementId c = part.sum(a, b); c != kUndefined) t.raw.set(map[a], map[b], map[c]);
            }
        }
    }
    return t.finish();
}

EffectAlgebra product(const std::vector<EffectAlgebra> &parts) {
    if (parts.empty()) throw Error(K::Malformed, "product needs at least one component");
    std::size_t total = 1;
    for (const auto &p : parts) {
        total *= p.size();
        if (total > kHardSizeCap) throw Error(K::BoundExceeded, "product exceeds 64 elements");
    }
    // Mixed radix, first component most significant.
    auto decode = [&](ElementId e) {
        std::vector<ElementId> digits(parts.size());
        for (std::size_t i = parts.size(); i-- > 0;) {
            digits[i] = e % parts[i].size();
            e /= parts[i].size();
        }
        return digits;
    };
    auto encode = [&](const std::vector<ElementId> &digits) {
        ElementId e = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) e = e * parts[i].size() + digits[i];
        return e;
    };
    std::vector<std::string> labels;
    for (ElementId e = 0; e < total; ++e) {
        auto d = decode(e);
        std::string text = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) text += ",";
            text += parts[i].label(d[i]);
        }
        labels.push_back(text + ")");
    }
    TableBuilder t(std::move(labels));
    std::vector<ElementId> zero, unit;
    for (const auto &p : parts) {
        zero.push_back(p.zero());
        unit.push_back(p.unit());
    }
    t.raw.zero = encode(zero);
    t.raw.unit = encode(unit);
    for (ElementId a = 0; a < total; ++a) {
        auto da = decode(a);
        for (ElementId b = 0; b < total; ++b) {
            auto db = decode(b);
            std::vector<ElementId> dc(parts.size());
            bool defined = true;
            for (std::size_t i = 0; i < parts.size() && defined; ++i) {
                dc[i] = parts[i].sum(da[i], db[i]);
                defined = dc[i] != kUndefined;
            }
            if (defined) t.raw.set(a, b, encode(dc));
        }
    }
    return t.finish();
}

std::string CatalogSpec::to_string() const {
    std::string out = name;
    if (parameters.empty() && children.empty()) return out;
    out += "(";
    bool first = true;
    for (int p : parameters) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    for (const auto &c : children) {
        if (!first) out += ",";
        out += c.to_string();
        first = false;
    }
    return out + ")";
}

namespace {

class SpecParser {
  public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    CatalogSpec parse() {
        CatalogSpec spec = parse_spec();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return spec;
    }

  private:
    [[noreturn]] void fail(const std::string &what) const {
        throw Error(K::Malformed, "catalog spec '" + std::string(text_) + "': " + what);
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    CatalogSpec parse_spec() {
        skip_space();
        CatalogSpec spec;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            spec.name += text_[pos_++];
        }
        if (spec.name.empty()) fail("expected a constructor name");
        if (!eat('(')) return spec;
        if (eat(')')) return spec;
        do {
            skip_space();
            if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
                std::size_t start = pos_++;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                try {
                    spec.parameters.push_back(std::stoi(std::string(text_.substr(start, pos_ - start))));
                } catch (const std::exception &) {
                    fail("bad integer");
                }
            } else {
                spec.children.push_back(parse_spec());
            }
        } while (eat(','));
        if (!eat(')')) fail("expected ')'");
        return spec;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CatalogSpec parse_spec(std::string_view text) {
    return SpecParser(text).parse();
}

EffectAlgebra build(const CatalogSpec &spec) {
    auto arity = [&](std::size_t ints, bool nested) {
        bool ok = spec.parameters.size() == ints && (nested ? !spec.children.empty() : spec.children.empty());
        if (!ok) throw Error(K::Malformed, "wrong arguments for catalog constructor '" + spec.name + "'");
    };
    if (spec.name == "boolean_powerset") {
        arity(1, false);
        return boolean_powerset(spec.parameters[0]);
    }
    if (spec.name == "chain") {
        arity(1, false);
        return chain(spec.parameters[0]);
    }
    if (spec.name == "mo") {
        arity(1, false);
        return mo(spec.parameters[0]);
    }
    if (spec.name == "wright_triangle") {
        arity(0, false);
        return wright_triangle();
    }
    if (spec.name == "horizontal_sum" || spec.name == "product") {
        arity(0, true);
        std::vector<EffectAlgebra> parts;
        for (const auto &c : spec.children) parts.push_back(build(c));
        return spec.name == "product" ? product(parts) : horizontal_sum(parts);
    }
    throw Error(K::Malformed, "unknown catalog constructor '" + spec.name + "'");
}

EffectAlgebra build(std::string_view text) {
    return build(parse_spec(text));
}

}  // namespace qlogic::catalog
