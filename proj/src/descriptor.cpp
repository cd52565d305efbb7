#include "cutkit/descriptor.hpp"

#include "cutkit/constructors.hpp"
#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cutkit {

namespace {

const std::set<std::string, std::less<>> kNamed{"cyclic", "elemab", "q8",   "sl23",  "sl25",
                                                 "c3c4",   "q8xc3",  "heis7", "xgroup", "ygroup"};

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Descriptor parse()
    {
        Descriptor d = descriptor();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return d;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError, "at " + std::to_string(pos_) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool at_end()
    {
        skip_space();
        return pos_ == s_.size();
    }

    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c)
    {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    // A comma, or just whitespace, between list items.
    void separator()
    {
        skip_space();
        accept(',');
    }

    std::string identifier()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' || s_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) fail("expected a name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::int64_t signed_number()
    {
        skip_space();
        bool negative = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (1ull << 40)) fail("number too large");
            ++pos_;
        }
        if (start == pos_) fail("expected a number");
        return negative ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    }

    std::uint64_t number()
    {
        const std::size_t at = pos_;
        std::int64_t v = signed_number();
        if (v < 0) {
            pos_ = at;
            fail("expected a nonnegative number");
        }
        return static_cast<std::uint64_t>(v);
    }

    std::vector<std::uint64_t> number_list()
    {
        std::vector<std::uint64_t> out;
        while (!at_end() && !peek(')') && !peek(';')) {
            out.push_back(number());
            separator();
        }
        return out;
    }

    Descriptor descriptor()
    {
        skip_space();
        const std::size_t start = pos_;
        const std::string name = identifier();
        Descriptor d;
        if (name == "dp") {
            d.kind = Descriptor::Kind::Dp;
            expect('(');
            d.children.push_back(descriptor());
            separator();
            d.children.push_back(descriptor());
            expect(')');
        } else if (name == "fam") {
            d.kind = Descriptor::Kind::Family;
            expect('(');
            d.name = identifier();
            separator();
            d.params = number_list();
            expect(')');
        } else if (name == "sd" || name == "mod") {
            d.kind = name == "sd" ? Descriptor::Kind::Sd : Descriptor::Kind::Mod;
            expect('(');
            d.params.push_back(number());
            separator();
            d.params.push_back(number());
            separator();
            d.children.push_back(descriptor());
            separator();
            d.params.push_back(number());
            if (d.kind == Descriptor::Kind::Mod) {
                const std::uint64_t p = d.params[0];
                if (p < 2) fail("modulus must be at least 2");
                while (accept(';')) {
                    std::vector<std::uint64_t> m;
                    while (!at_end() && !peek(')') && !peek(';')) {
                        std::int64_t v = signed_number();
                        std::int64_t r = v % static_cast<std::int64_t>(p);
                        m.push_back(static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r));
                        separator();
                    }
                    if (m.size() != d.params[1] * d.params[1]) fail("matrix needs d*d entries");
                    d.matrices.push_back(std::move(m));
                }
            }
            expect(')');
        } else if (name == "perm") {
            d.kind = Descriptor::Kind::Perm;
            expect('(');
            d.degree = number();
            if (d.degree == 0) fail("degree must be positive");
            while (accept(';')) d.cycles.push_back(generator(d.degree));
            expect(')');
        } else if (name == "meta") {
            d.kind = Descriptor::Kind::Meta;
            expect('(');
            d.params = number_list();
            expect(')');
            if (d.params.size() != 3) fail("meta takes three parameters");
            if (d.params[0] > 1) d.params[2] %= d.params[0];
            else d.params[2] = 0;
        } else if (kNamed.count(name)) {
            d.kind = Descriptor::Kind::Named;
            d.name = name;
            if (accept('(')) {
                d.params = number_list();
                expect(')');
            }
        } else {
            throw Error(ErrorKind::UnknownName, "'" + name + "' at " + std::to_string(start));
        }
        return d;
    }

    std::vector<std::vector<std::uint32_t>> generator(std::size_t degree)
    {
        std::vector<std::vector<std::uint32_t>> cycles;
        std::set<std::uint32_t> used;
        while (peek('(')) {
            ++pos_;
            std::vector<std::uint32_t> cycle;
            while (!at_end() && !peek(')')) {
                const std::size_t at = pos_;
                std::uint64_t v = number();
                if (v >= degree || !used.insert(static_cast<std::uint32_t>(v)).second) {
                    pos_ = at;
                    fail("point out of range or repeated");
                }
                cycle.push_back(static_cast<std::uint32_t>(v));
                separator();
            }
            expect(')');
            if (cycle.size() > 1) {
                std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
                cycles.push_back(std::move(cycle));
            }
        }
        if (!peek(';') && !peek(')')) fail("expected a cycle");
        std::sort(cycles.begin(), cycles.end());
        return cycles;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string join_numbers(const std::vector<std::uint64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

Descriptor canonical_form(Descriptor d)
{
    if (d.kind == Descriptor::Kind::Family && d.name == "odd-2group" && d.params.size() == 1) d.params.push_back(0);
    for (auto& c : d.children) c = canonical_form(std::move(c));
    return d;
}

} // namespace

Descriptor parse_descriptor(std::string_view text)
{
    if (text.empty()) throw Error(ErrorKind::ParseError, "at 0: empty descriptor");
    return canonical_form(Parser(text).parse());
}

std::string print_descriptor(const Descriptor& d)
{
    switch (d.kind) {
    case Descriptor::Kind::Named:
        return d.params.empty() ? d.name : d.name + "(" + join_numbers(d.params) + ")";
    case Descriptor::Kind::Family:
        return "fam(" + d.name + (d.params.empty() ? "" : "," + join_numbers(d.params)) + ")";
    case Descriptor::Kind::Sd:
    case Descriptor::Kind::Mod: {
        std::string out = (d.kind == Descriptor::Kind::Sd ? "sd(" : "mod(") + std::to_string(d.params[0]) + "," +
                          std::to_string(d.params[1]) + "," + print_descriptor(d.children[0]) + "," +
                          std::to_string(d.params[2]);
        for (const auto& m : d.matrices) out += ";" + join_numbers(m);
        return out + ")";
    }
    case Descriptor::Kind::Perm: {
        std::string out = "perm(" + std::to_string(d.degree);
        for (const auto& gen : d.cycles) {
            out += ";";
            if (gen.empty()) out += "()";
            for (const auto& cycle : gen) {
                out += "(";
                for (std::size_t i = 0; i < cycle.size(); ++i) out += (i ? "," : "") + std::to_string(cycle[i]);
                out += ")";
            }
        }
        return out + ")";
    }
    case Descriptor::Kind::Meta:
        return "meta(" + join_numbers(d.params) + ")";
    case Descriptor::Kind::Dp:
        return "dp(" + print_descriptor(d.children[0]) + "," + print_descriptor(d.children[1]) + ")";
    }
    return {};
}

std::string canonical_descriptor(std::string_view text) { return print_descriptor(parse_descriptor(text)); }

PermutationGroup build_group(const Descriptor& d)
{
    const std::string canonical = print_descriptor(d);
    PermutationGroup g;
    switch (d.kind) {
    case Descriptor::Kind::Named:
        g = named_group(d.name, d.params);
        break;
    case Descriptor::Kind::Family:
        g = family({d.name, d.params});
        break;
    case Descriptor::Kind::Sd: {
        PermutationGroup k = build_group(d.children[0]);
        if (!is_prime(d.params[0])) throw Error(ErrorKind::InvalidParameters, "sd needs a prime modulus");
        ModuleAction act = rep_search(k, d.params[0], d.params[1], true);
        act.s = d.params[2];
        g = module_semidirect(act, canonical);
        break;
    }
    case Descriptor::Kind::Mod: {
        ModuleAction act;
        act.p = d.params[0];
        act.d = d.params[1];
        act.K = build_group(d.children[0]);
        act.s = d.params[2];
        for (const auto& entries : d.matrices) {
            FpMatrix m(act.d, act.d, act.p);
            for (std::size_t i = 0; i < entries.size(); ++i) m.set(i / act.d, i % act.d, entries[i]);
            act.matrices.push_back(std::move(m));
        }
        validate_action(act);
        g = module_semidirect(act, canonical);
        break;
    }
    case Descriptor::Kind::Perm: {
        std::vector<Perm> gens;
        for (const auto& gen : d.cycles) {
            std::vector<std::vector<Point>> cycles;
            for (const auto& c : gen) cycles.emplace_back(c.begin(), c.end());
            gens.push_back(Perm::from_cycles(d.degree, cycles));
        }
        g = PermutationGroup(d.degree, std::move(gens));
        break;
    }
    case Descriptor::Kind::Meta:
        g = metacyclic(d.params[0], d.params[1], d.params[2]);
        break;
    case Descriptor::Kind::Dp:
        g = direct_product(build_group(d.children[0]), build_group(d.children[1]));
        break;
    }
    g.set_descriptor(canonical);
    return g;
}

PermutationGroup build_group(std::string_view text) { return build_group(parse_descriptor(text)); }

std::string module_descriptor(const ModuleAction& act)
{
    std::string out = "mod(" + std::to_string(act.p) + "," + std::to_string(act.d) + "," + act.K.descriptor() + "," +
                      std::to_string(act.s);
    for (const auto& m : act.matrices) out += ";" + join_numbers(m.entries());
    return canonical_descriptor(out + ")");
}

} // namespace cutkit
