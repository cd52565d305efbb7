#include "cutkit/group.hpp"

#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>

namespace cutkit {

namespace {

constexpr ElementIndex kEmptySlot = std::numeric_limits<ElementIndex>::max();

std::uint64_t hash_images(std::span<const Point> images)
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ images.size();
    for (Point p : images) {
        h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

std::vector<Point>& scratch(std::size_t degree)
{
    thread_local std::vector<Point> buf;
    buf.resize(degree);
    return buf;
}

// Membership marks reused across closures; an epoch bump clears them.
class Marks {
public:
    explicit Marks(std::size_t n)
    {
        auto& s = state();
        if (s.stamp.size() < n) s.stamp.assign(n, 0);
        if (++s.epoch == 0) {
            std::fill(s.stamp.begin(), s.stamp.end(), 0);
            s.epoch = 1;
        }
        epoch_ = s.epoch;
    }
    bool test(ElementIndex i) const { return state().stamp[i] == epoch_; }
    void set(ElementIndex i) { state().stamp[i] = epoch_; }

private:
    struct State {
        std::vector<std::uint32_t> stamp;
        std::uint32_t epoch = 0;
    };
    static State& state()
    {
        thread_local State s;
        return s;
    }
    std::uint32_t epoch_;
};

// Breadth-first closure of a generator set inside a materialized group.
// Nested closures must not be interleaved on one thread (shared marks).
class Closure {
public:
    Closure(const ElementTable& t, std::size_t limit) : table_(t), limit_(limit), marks_(t.size())
    {
        elements_.push_back(t.identity());
        marks_.set(t.identity());
    }

    bool contains(ElementIndex i) const { return marks_.test(i); }
    const std::vector<ElementIndex>& elements() const { return elements_; }
    const std::vector<ElementIndex>& generators() const { return gens_; }

    // Returns false if the limit was exceeded.
    bool add_generator(ElementIndex y)
    {
        if (contains(y)) return true;
        gens_.push_back(y);
        for (std::size_t pos = 0; pos < elements_.size(); ++pos) {
            for (ElementIndex h : gens_) {
                ElementIndex p = table_.multiply(elements_[pos], h);
                if (!marks_.test(p)) {
                    marks_.set(p);
                    elements_.push_back(p);
                    if (elements_.size() > limit_) return false;
                }
            }
        }
        return true;
    }

private:
    const ElementTable& table_;
    std::size_t limit_;
    Marks marks_;
    std::vector<ElementIndex> elements_;
    std::vector<ElementIndex> gens_;
};

std::vector<ElementIndex> sorted(std::vector<ElementIndex> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

// ---- ElementTable --------------------------------------------------------

Perm ElementTable::element(ElementIndex i) const
{
    auto s = images(i);
    return Perm(std::vector<Point>(s.begin(), s.end()));
}

std::optional<ElementIndex> ElementTable::find(std::span<const Point> imgs) const
{
    if (imgs.size() != degree_) return std::nullopt;
    std::size_t slot = hash_images(imgs) & mask_;
    while (slots_[slot] != kEmptySlot) {
        ElementIndex cand = slots_[slot];
        auto ci = images(cand);
        if (std::equal(ci.begin(), ci.end(), imgs.begin())) return cand;
        slot = (slot + 1) & mask_;
    }
    return std::nullopt;
}

ElementIndex ElementTable::index_of(const Perm& p) const
{
    auto idx = find(p);
    if (!idx) throw Error(ErrorKind::ElementNotInGroup, p.cycle_string());
    return *idx;
}

ElementIndex ElementTable::multiply(ElementIndex a, ElementIndex b) const
{
    auto& buf = scratch(degree_);
    const Point* ia = data_.data() + static_cast<std::size_t>(a) * degree_;
    const Point* ib = data_.data() + static_cast<std::size_t>(b) * degree_;
    for (std::size_t i = 0; i < degree_; ++i) buf[i] = ib[ia[i]];
    return *find(buf);
}

ElementIndex ElementTable::conjugate(ElementIndex x, ElementIndex g) const
{
    auto& buf = scratch(degree_);
    const Point* ix = data_.data() + static_cast<std::size_t>(x) * degree_;
    const Point* ig = data_.data() + static_cast<std::size_t>(g) * degree_;
    const Point* igi = data_.data() + static_cast<std::size_t>(inverse_[g]) * degree_;
    for (std::size_t p = 0; p < degree_; ++p) buf[p] = ig[ix[igi[p]]];
    return *find(buf);
}

ElementIndex ElementTable::power(ElementIndex x, std::int64_t k) const
{
    std::uint64_t ord = orders_[x];
    std::int64_t r = k % static_cast<std::int64_t>(ord);
    if (r < 0) r += static_cast<std::int64_t>(ord);
    ElementIndex result = identity();
    ElementIndex base = x;
    auto e = static_cast<std::uint64_t>(r);
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

void ElementTable::insert_slot(ElementIndex i)
{
    std::size_t slot = hash_images(images(i)) & mask_;
    while (slots_[slot] != kEmptySlot) slot = (slot + 1) & mask_;
    slots_[slot] = i;
}

std::shared_ptr<const ElementTable> ElementTable::build(std::size_t degree, const std::vector<Perm>& gens,
                                                        std::size_t max_order)
{
    auto t = std::make_shared<ElementTable>();
    t->degree_ = degree;
    t->gen_count_ = gens.size();
    for (const auto& g : gens) {
        if (g.degree() != degree) throw Error(ErrorKind::InvalidPermutation, "generator degree mismatch");
    }
    t->mask_ = 63;
    t->slots_.assign(t->mask_ + 1, kEmptySlot);

    auto append = [&](std::span<const Point> imgs, ElementIndex parent, std::uint32_t gen) {
        auto idx = static_cast<ElementIndex>(t->size_);
        t->data_.insert(t->data_.end(), imgs.begin(), imgs.end());
        t->parent_.push_back(parent);
        t->parent_gen_.push_back(gen);
        ++t->size_;
        if (t->size_ > max_order) {
            throw Error(ErrorKind::OrderLimitExceeded, "group order exceeds " + std::to_string(max_order));
        }
        if (2 * t->size_ > t->mask_) {
            t->mask_ = t->mask_ * 2 + 1;
            t->slots_.assign(t->mask_ + 1, kEmptySlot);
            for (ElementIndex i = 0; i < t->size_; ++i) t->insert_slot(i);
        } else {
            t->insert_slot(idx);
        }
        return idx;
    };

    Perm id = Perm::identity(degree);
    append(id.images(), 0, 0);
    std::vector<Point> buf(degree);
    for (std::size_t pos = 0; pos < t->size_; ++pos) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            auto g = gens[j].images();
            const Point* ix = t->data_.data() + pos * degree;
            for (std::size_t i = 0; i < degree; ++i) buf[i] = g[ix[i]];
            auto found = t->find(buf);
            ElementIndex idx = found ? *found : append(buf, static_cast<ElementIndex>(pos), static_cast<std::uint32_t>(j));
            t->right_.push_back(idx);
        }
    }

    t->inverse_.resize(t->size_);
    t->orders_.resize(t->size_);
    for (ElementIndex i = 0; i < t->size_; ++i) {
        auto s = t->images(i);
        for (std::size_t p = 0; p < degree; ++p) buf[s[p]] = static_cast<Point>(p);
        t->inverse_[i] = *t->find(buf);
        t->orders_[i] = t->element(i).order();
    }
    return t;
}

// ---- PermutationGroup ----------------------------------------------------

struct PermutationGroup::Shared {
    std::size_t degree = 1;
    std::vector<Perm> generators;
    std::mutex mutex;
    std::shared_ptr<const ElementTable> table;
    std::unique_ptr<ClassData> classes;
};

PermutationGroup::PermutationGroup() : shared_(std::make_shared<Shared>())
{
    shared_->generators.push_back(Perm::identity(1));
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Perm> generators, std::string descriptor)
    : shared_(std::make_shared<Shared>()), descriptor_(std::move(descriptor))
{
    if (degree == 0) degree = 1;
    if (generators.empty()) generators.push_back(Perm::identity(degree));
    for (const auto& g : generators) {
        if (g.degree() != degree) throw Error(ErrorKind::InvalidPermutation, "generator degree mismatch");
    }
    shared_->degree = degree;
    shared_->generators = std::move(generators);
}

std::size_t PermutationGroup::degree() const { return shared_->degree; }
const std::vector<Perm>& PermutationGroup::generators() const { return shared_->generators; }

const ElementTable& PermutationGroup::materialize(std::size_t max_order) const
{
    std::lock_guard lock(shared_->mutex);
    if (!shared_->table) shared_->table = ElementTable::build(shared_->degree, shared_->generators, max_order);
    return *shared_->table;
}

bool PermutationGroup::is_materialized() const
{
    std::lock_guard lock(shared_->mutex);
    return shared_->table != nullptr;
}

const ClassData& PermutationGroup::classes() const
{
    materialize();
    std::lock_guard lock(shared_->mutex);
    if (!shared_->classes) shared_->classes = std::make_unique<ClassData>(shared_->table);
    return *shared_->classes;
}

// ---- ClassData -----------------------------------------------------------

struct ClassData::PowerCache {
    std::mutex mutex;
    std::map<std::uint64_t, std::vector<std::size_t>> maps;
};

ClassData::ClassData(std::shared_ptr<const ElementTable> table)
    : table_(std::move(table)), power_cache_(std::make_shared<PowerCache>())
{
    const ElementTable& t = *table_;
    constexpr std::uint32_t unassigned = std::numeric_limits<std::uint32_t>::max();
    class_of_.assign(t.size(), unassigned);
    std::vector<ElementIndex> gens;
    for (std::size_t j = 0; j < t.generator_count(); ++j) gens.push_back(t.generator(j));

    for (ElementIndex x = 0; x < t.size(); ++x) {
        if (class_of_[x] != unassigned) continue;
        auto c = static_cast<std::uint32_t>(reps_.size());
        reps_.push_back(x);
        std::vector<ElementIndex> orbit{x};
        class_of_[x] = c;
        for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
            for (ElementIndex g : gens) {
                ElementIndex y = t.conjugate(orbit[pos], g);
                if (class_of_[y] == unassigned) {
                    class_of_[y] = c;
                    orbit.push_back(y);
                }
            }
        }
        sizes_.push_back(orbit.size());
        members_.push_back(sorted(std::move(orbit)));
        exponent_ = lcm(exponent_, t.order_of(x));
    }
    inverse_perm_.resize(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) inverse_perm_[c] = class_of_[t.inverse(reps_[c])];
}

const std::vector<std::size_t>& ClassData::power_map(std::uint64_t k) const
{
    std::uint64_t r = k % exponent_;
    if (gcd(r == 0 ? exponent_ : r, exponent_) != 1 && exponent_ != 1) {
        throw Error(ErrorKind::NotCoprime, "k=" + std::to_string(k) + " exponent=" + std::to_string(exponent_));
    }
    std::lock_guard lock(power_cache_->mutex);
    auto it = power_cache_->maps.find(r);
    if (it != power_cache_->maps.end()) return it->second;
    std::vector<std::size_t> map(reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) map[c] = class_of_[table_->power(reps_[c], static_cast<std::int64_t>(r))];
    return power_cache_->maps.emplace(r, std::move(map)).first->second;
}

std::size_t ClassData::power_class(std::size_t c, std::uint64_t k) const
{
    return class_of_[table_->power(reps_[c], static_cast<std::int64_t>(k % exponent_))];
}

std::size_t power_map_apply(const ClassData& cd, std::uint64_t k, std::size_t c) { return cd.power_map(k)[c]; }

// ---- Subgroup ------------------------------------------------------------

Subgroup::Subgroup(PermutationGroup parent, std::vector<ElementIndex> elements, std::vector<ElementIndex> generators)
    : parent_(std::move(parent)), elements_(sorted(std::move(elements))), generators_(std::move(generators))
{
    member_.assign(parent_.table().size(), false);
    for (ElementIndex e : elements_) member_[e] = true;
}

bool Subgroup::contains(const Perm& p) const
{
    auto idx = parent_.table().find(p);
    return idx && member_[*idx];
}

std::vector<Perm> Subgroup::generators() const
{
    std::vector<Perm> out;
    for (ElementIndex g : generators_) out.push_back(parent_.table().element(g));
    return out;
}

PermutationGroup Subgroup::as_group(std::string descriptor) const
{
    auto gens = generators();
    if (gens.empty()) gens.push_back(Perm::identity(parent_.degree()));
    return PermutationGroup(parent_.degree(), std::move(gens), std::move(descriptor));
}

bool Subgroup::is_subset_of(const Subgroup& other) const
{
    return std::all_of(elements_.begin(), elements_.end(), [&](ElementIndex e) { return other.contains(e); });
}

// ---- Homomorphism --------------------------------------------------------

Homomorphism::Homomorphism(PermutationGroup source, PermutationGroup target, std::vector<Perm> gen_images)
    : source_(std::move(source)), target_(std::move(target)), gen_images_(std::move(gen_images))
{
}

void Homomorphism::verify()
{
    const ElementTable& st = source_.table();
    if (gen_images_.size() != st.generator_count()) {
        throw Error(ErrorKind::NotAHomomorphism, "need one image per generator");
    }
    const ElementTable& tt = target_.table();
    for (const auto& img : gen_images_) {
        if (!tt.find(img)) throw Error(ErrorKind::NotAHomomorphism, "generator image outside target");
    }
    images_.assign(st.size(), Perm{});
    images_[0] = Perm::identity(target_.degree());
    for (ElementIndex i = 1; i < st.size(); ++i) images_[i] = images_[st.parent(i)] * gen_images_[st.parent_generator(i)];
    for (ElementIndex i = 0; i < st.size(); ++i) {
        for (std::size_t j = 0; j < gen_images_.size(); ++j) {
            if (images_[st.times_generator(i, j)] != images_[i] * gen_images_[j]) {
                images_.clear();
                throw Error(ErrorKind::NotAHomomorphism, "relation violated at element " + std::to_string(i));
            }
        }
    }
    verified_ = true;
}

Perm Homomorphism::apply(const Perm& x) const { return images_.at(source_.table().index_of(x)); }

bool Homomorphism::is_injective() const
{
    const ElementTable& tt = target_.table();
    std::vector<bool> hit(tt.size(), false);
    for (const auto& img : images_) {
        ElementIndex idx = tt.index_of(img);
        if (hit[idx]) return false;
        hit[idx] = true;
    }
    return true;
}

bool Homomorphism::is_bijective() const { return source_.order() == target_.order() && is_injective(); }

Homomorphism Homomorphism::then(const Homomorphism& next) const
{
    std::vector<Perm> imgs;
    for (const auto& g : gen_images_) imgs.push_back(next.apply(g));
    Homomorphism out(source_, next.target_, std::move(imgs));
    out.verify();
    return out;
}

// ---- subgroup algorithms -------------------------------------------------

Subgroup trivial_subgroup(const PermutationGroup& g)
{
    g.materialize();
    return Subgroup(g, {0}, {});
}

Subgroup whole_group(const PermutationGroup& g)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> all(t.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<ElementIndex> gens;
    for (std::size_t j = 0; j < t.generator_count(); ++j) gens.push_back(t.generator(j));
    return Subgroup(g, std::move(all), std::move(gens));
}

std::optional<Subgroup> generate_subgroup_bounded(const PermutationGroup& g, std::span<const ElementIndex> gens,
                                                  std::size_t limit)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> elements, used;
    {
        Closure c(t, limit);
        for (ElementIndex y : gens) {
            if (!c.add_generator(y)) return std::nullopt;
        }
        elements = c.elements();
        used = c.generators();
    }
    return Subgroup(g, std::move(elements), std::move(used));
}

Subgroup generate_subgroup(const PermutationGroup& g, std::span<const ElementIndex> gens)
{
    return *generate_subgroup_bounded(g, gens, std::numeric_limits<std::size_t>::max());
}

Subgroup subgroup_from_elements(const PermutationGroup& g, std::vector<ElementIndex> elements)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> gens;
    {
        Closure c(t, std::numeric_limits<std::size_t>::max());
        for (ElementIndex e : sorted(elements)) {
            if (!c.contains(e)) c.add_generator(e);
        }
        gens = c.generators();
    }
    return Subgroup(g, std::move(elements), std::move(gens));
}

Subgroup cyclic_subgroup(const PermutationGroup& g, ElementIndex x)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> elements{t.identity()};
    for (ElementIndex y = x; y != t.identity(); y = t.multiply(y, x)) elements.push_back(y);
    std::vector<ElementIndex> gens;
    if (x != t.identity()) gens.push_back(x);
    return Subgroup(g, std::move(elements), std::move(gens));
}

Subgroup cyclic_subgroup(const PermutationGroup& g, const Perm& x)
{
    return cyclic_subgroup(g, g.materialize().index_of(x));
}

Subgroup centralizer(const PermutationGroup& g, ElementIndex x)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> elems;
    for (ElementIndex y = 0; y < t.size(); ++y) {
        if (t.multiply(x, y) == t.multiply(y, x)) elems.push_back(y);
    }
    return subgroup_from_elements(g, std::move(elems));
}

Subgroup centralizer(const PermutationGroup& g, const Perm& x) { return centralizer(g, g.materialize().index_of(x)); }

Subgroup normalizer(const PermutationGroup& g, const Subgroup& h)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> elems;
    for (ElementIndex y = 0; y < t.size(); ++y) {
        bool ok = std::all_of(h.generator_indices().begin(), h.generator_indices().end(),
                              [&](ElementIndex s) { return h.contains(t.conjugate(s, y)); });
        if (ok) elems.push_back(y);
    }
    return subgroup_from_elements(g, std::move(elems));
}

Subgroup center(const PermutationGroup& g)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> elems;
    for (ElementIndex y = 0; y < t.size(); ++y) {
        bool central = true;
        for (std::size_t j = 0; j < t.generator_count() && central; ++j) {
            central = t.conjugate(y, t.generator(j)) == y;
        }
        if (central) elems.push_back(y);
    }
    return subgroup_from_elements(g, std::move(elems));
}

Subgroup join(const Subgroup& a, const Subgroup& b)
{
    std::vector<ElementIndex> gens = a.generator_indices();
    gens.insert(gens.end(), b.generator_indices().begin(), b.generator_indices().end());
    return generate_subgroup(a.parent(), gens);
}

namespace {

// Normal closure of seeds under conjugation by conj_gens.
Subgroup normal_closure_under(const PermutationGroup& g, std::span<const ElementIndex> seeds,
                              std::span<const ElementIndex> conj_gens)
{
    const ElementTable& t = g.materialize();
    std::vector<ElementIndex> elements, gens;
    {
        Closure c(t, std::numeric_limits<std::size_t>::max());
        for (ElementIndex s : seeds) c.add_generator(s);
        for (std::size_t i = 0; i < c.generators().size(); ++i) {
            for (ElementIndex cg : conj_gens) {
                ElementIndex y = t.conjugate(c.generators()[i], cg);
                if (!c.contains(y)) c.add_generator(y);
            }
        }
        elements = c.elements();
        gens = c.generators();
    }
    return Subgroup(g, std::move(elements), std::move(gens));
}

std::vector<ElementIndex> generator_indices(const ElementTable& t)
{
    std::vector<ElementIndex> gens;
    for (std::size_t j = 0; j < t.generator_count(); ++j) gens.push_back(t.generator(j));
    return gens;
}

} // namespace

Subgroup normal_closure(const PermutationGroup& g, std::span<const ElementIndex> gens)
{
    return normal_closure_under(g, gens, generator_indices(g.materialize()));
}

bool is_normal(const PermutationGroup& g, const Subgroup& h)
{
    const ElementTable& t = g.materialize();
    for (ElementIndex s : h.generator_indices()) {
        for (std::size_t j = 0; j < t.generator_count(); ++j) {
            if (!h.contains(t.conjugate(s, t.generator(j)))) return false;
        }
    }
    return true;
}

Subgroup derived_subgroup(const Subgroup& h)
{
    const ElementTable& t = h.parent().table();
    const auto& hg = h.generator_indices();
    std::vector<ElementIndex> comms;
    for (std::size_t a = 0; a < hg.size(); ++a) {
        for (std::size_t b = a + 1; b < hg.size(); ++b) {
            ElementIndex x = hg[a], y = hg[b];
            ElementIndex c = t.multiply(t.multiply(t.inverse(x), t.inverse(y)), t.multiply(x, y));
            if (c != t.identity()) comms.push_back(c);
        }
    }
    if (comms.empty()) return trivial_subgroup(h.parent());
    return normal_closure_under(h.parent(), comms, hg);
}

std::vector<Subgroup> derived_series(const PermutationGroup& g)
{
    std::vector<Subgroup> series{whole_group(g)};
    while (true) {
        Subgroup next = derived_subgroup(series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_solvable(const PermutationGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_abelian(const PermutationGroup& g)
{
    const auto& gens = g.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (gens[a] * gens[b] != gens[b] * gens[a]) return false;
        }
    }
    return true;
}

Subgroup sylow_subgroup(const PermutationGroup& g, std::uint64_t p)
{
    const ElementTable& t = g.materialize();
    const std::uint64_t target = p_part(t.size(), p);
    if (!is_prime(p) || target == 1) {
        throw Error(ErrorKind::PrimeDoesNotDivideOrder, std::to_string(p) + " does not divide " + std::to_string(t.size()));
    }
    auto is_p_element = [&](ElementIndex i) { return t.order_of(i) > 1 && p_part(t.order_of(i), p) == t.order_of(i); };

    ElementIndex start = 0;
    while (!is_p_element(start)) ++start;
    Subgroup current = cyclic_subgroup(g, start);
    while (current.order() < target) {
        Subgroup norm = normalizer(g, current);
        auto it = std::find_if(norm.elements().begin(), norm.elements().end(),
                               [&](ElementIndex y) { return !current.contains(y) && is_p_element(y); });
        if (it == norm.elements().end()) {
            throw Error(ErrorKind::InvalidParameters, "p-subgroup not extendable; group table inconsistent");
        }
        std::vector<ElementIndex> gens = current.generator_indices();
        gens.push_back(*it);
        current = generate_subgroup(g, gens);
    }
    return current;
}

Quotient quotient(const PermutationGroup& g, const Subgroup& n)
{
    if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
    const ElementTable& t = g.materialize();
    constexpr std::uint32_t unassigned = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> coset_of(t.size(), unassigned);
    std::vector<ElementIndex> coset_reps;
    for (ElementIndex x = 0; x < t.size(); ++x) {
        if (coset_of[x] != unassigned) continue;
        auto id = static_cast<std::uint32_t>(coset_reps.size());
        coset_reps.push_back(x);
        for (ElementIndex m : n.elements()) coset_of[t.multiply(m, x)] = id;
    }
    const std::size_t degree = coset_reps.size();
    std::vector<Perm> gens;
    for (std::size_t j = 0; j < t.generator_count(); ++j) {
        std::vector<Point> imgs(degree);
        for (std::size_t c = 0; c < degree; ++c) imgs[c] = coset_of[t.times_generator(coset_reps[c], j)];
        gens.emplace_back(std::move(imgs));
    }
    PermutationGroup q(degree, gens, g.descriptor().empty() ? std::string{} : "quotient(" + g.descriptor() + ")");
    Homomorphism proj(g, q, gens);
    proj.verify();
    return Quotient{std::move(q), std::move(proj), std::move(coset_of)};
}

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b)
{
    const std::size_t degree = a.degree() + b.degree();
    std::vector<Perm> gens;
    for (const auto& x : a.generators()) gens.push_back(x.embedded(degree, 0));
    for (const auto& y : b.generators()) gens.push_back(y.embedded(degree, a.degree()));
    return PermutationGroup(degree, std::move(gens), "dp(" + a.descriptor() + "," + b.descriptor() + ")");
}

std::uint64_t exponent(const PermutationGroup& g)
{
    const ElementTable& t = g.materialize();
    std::uint64_t e = 1;
    for (ElementIndex i = 0; i < t.size(); ++i) e = lcm(e, t.order_of(i));
    return e;
}

std::vector<std::uint64_t> prime_spectrum(const PermutationGroup& g) { return prime_divisors(g.order()); }

namespace {

void sort_subgroups(std::vector<Subgroup>& subs)
{
    std::sort(subs.begin(), subs.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elements() < y.elements();
    });
}

// Closes seeds under pairwise joins; seeds are added in the given order.
std::vector<Subgroup> join_closure(const std::vector<Subgroup>& seeds, std::size_t cap)
{
    std::vector<Subgroup> all;
    std::set<std::vector<ElementIndex>> seen;
    for (const auto& s : seeds) {
        if (seen.insert(s.elements()).second) all.push_back(s);
    }
    std::vector<Subgroup> base = all;
    for (std::size_t i = 0; i < all.size() && all.size() < cap; ++i) {
        for (const auto& b : base) {
            if (b.is_subset_of(all[i])) continue;
            Subgroup j = join(all[i], b);
            if (seen.insert(j.elements()).second) {
                all.push_back(std::move(j));
                if (all.size() >= cap) break;
            }
        }
    }
    sort_subgroups(all);
    return all;
}

} // namespace

std::vector<Subgroup> subgroup_lattice(const PermutationGroup& g)
{
    const ElementTable& t = g.materialize();
    if (t.size() > 200) throw Error(ErrorKind::OrderLimitExceeded, "subgroup lattice limited to order 200");
    std::vector<Subgroup> cyclics;
    for (ElementIndex x = 0; x < t.size(); ++x) cyclics.push_back(cyclic_subgroup(g, x));
    return join_closure(cyclics, std::numeric_limits<std::size_t>::max());
}

namespace {

// Normal subgroups as sets of classes. The classes met by C_i C_j are the
// classes of u rep_j for u in C_i; these are computed on demand.
class ClassProducts {
public:
    explicit ClassProducts(const ClassData& cd) : cd_(cd), memo_(cd.class_count() * cd.class_count()) {}

    const std::vector<std::size_t>& classes_in(std::size_t i, std::size_t j)
    {
        auto& slot = memo_[i * cd_.class_count() + j];
        if (!slot) {
            std::vector<char> hit(cd_.class_count(), 0);
            for (ElementIndex u : cd_.members(i)) hit[cd_.class_of(cd_.table().multiply(u, cd_.rep(j)))] = 1;
            slot.emplace();
            for (std::size_t k = 0; k < hit.size(); ++k) {
                if (hit[k]) slot->push_back(k);
            }
        }
        return *slot;
    }

    // Smallest product-closed class set containing in and the identity.
    std::vector<char> closure(std::vector<char> in)
    {
        in[0] = 1;
        std::vector<std::size_t> members;
        for (std::size_t c = 0; c < in.size(); ++c) {
            if (in[c]) members.push_back(c);
        }
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b <= a; ++b) {
                for (std::size_t k : classes_in(members[a], members[b])) {
                    if (!in[k]) {
                        in[k] = 1;
                        members.push_back(k);
                    }
                }
            }
        }
        return in;
    }

private:
    const ClassData& cd_;
    std::vector<std::optional<std::vector<std::size_t>>> memo_;
};

} // namespace

std::vector<Subgroup> normal_subgroups(const PermutationGroup& g, std::size_t cap)
{
    const ClassData& cd = g.classes();
    const std::size_t r = cd.class_count();
    ClassProducts products(cd);
    std::vector<std::vector<char>> all;
    std::set<std::vector<char>> seen;
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<char> in(r, 0);
        in[c] = 1;
        auto closed = products.closure(std::move(in));
        if (seen.insert(closed).second) all.push_back(std::move(closed));
    }
    const std::vector<std::vector<char>> base = all;
    for (std::size_t i = 0; i < all.size() && all.size() < cap; ++i) {
        for (const auto& b : base) {
            std::vector<char> u = all[i];
            bool grew = false;
            for (std::size_t c = 0; c < r; ++c) {
                if (b[c] && !u[c]) {
                    u[c] = 1;
                    grew = true;
                }
            }
            if (!grew) continue;
            auto closed = products.closure(std::move(u));
            if (seen.insert(closed).second) {
                all.push_back(std::move(closed));
                if (all.size() >= cap) break;
            }
        }
    }
    std::vector<Subgroup> out;
    for (const auto& in : all) {
        std::vector<ElementIndex> elements;
        for (std::size_t c = 0; c < r; ++c) {
            if (in[c]) elements.insert(elements.end(), cd.members(c).begin(), cd.members(c).end());
        }
        out.push_back(subgroup_from_elements(g, std::move(elements)));
    }
    sort_subgroups(out);
    return out;
}

} // namespace cutkit
