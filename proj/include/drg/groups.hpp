#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

using Element = std::uint32_t;

// Finite group given by its multiplication table.  Copies share the table.
class Group {
  public:
    // Validates closure, identity, inverses and (for n <= 256 fully, sampled
    // above) associativity; throws drg::Error naming the failed axiom.
    static Group from_table(std::vector<std::vector<Element>> table, std::vector<std::string> labels = {},
                            std::string name = {});

    std::size_t order() const { return data_->n; }
    Element identity() const { return data_->identity; }
    Element mul(Element a, Element b) const { return data_->table[std::size_t(a) * data_->n + b]; }
    Element inverse(Element a) const { return data_->inverse[a]; }
    Element power(Element a, long long k) const;
    std::size_t element_order(Element a) const { return data_->orders[a]; }
    // a^-1 b^-1 a b
    Element commutator(Element a, Element b) const;
    // g^-1 x g
    Element conjugate(Element x, Element g) const;

    const std::string& label(Element a) const { return data_->labels[a]; }
    const std::vector<std::string>& labels() const { return data_->labels; }
    std::optional<Element> find(std::string_view label) const;
    // Looks up a label, falling back to a decimal index.
    Element parse_element(std::string_view token) const;
    const std::string& name() const { return data_->name; }
    bool is_abelian() const;

  private:
    struct Data {
        std::size_t n = 0;
        std::vector<Element> table, inverse;
        std::vector<std::size_t> orders;
        Element identity = 0;
        std::vector<std::string> labels;
        std::string name;
    };
    explicit Group(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;

    friend bool same_group(const Group&, const Group&);
};

// True when both handles share one table (identity of objects, not isomorphism).
bool same_group(const Group& a, const Group& b);

class SubgroupHandle {
  public:
    SubgroupHandle(Group parent, std::vector<Element> elements);
    const Group& parent() const { return parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(Element x) const;

  private:
    Group parent_;
    std::vector<Element> elements_;
};

Group cyclic_group(std::size_t n);
// Order 2n; element i is a^i and n+i is ba^i.
Group dihedral_group(std::size_t order);
Group elementary_abelian_group(unsigned p, unsigned k);
// (g, h) has index g*|H| + h.
Group direct_product(const Group& g, const Group& h);
Group symmetric_group(unsigned n);
Group alternating_group(unsigned n);
// G ∪ Gc with cgc = g^-1; index |G|+i is g_i c.
Group generalized_dihedral_extension(const Group& g);
// Pairs over GF(q) with (x1,x2)+(y1,y2) = (x1+y1, x2+y2+x1*y1); index x1*q + x2.
Group semifield_plane_group(unsigned q);
// Z_n ⋊ Z_m with a generator of Z_m acting as x -> r*x; requires r^m = 1 mod n.
// Index j*n + i is a^i c^j, labels "a^i c^j".
Group metacyclic_group(std::size_t n, std::size_t m, std::size_t r);
// Order 32 on (u in Z2^4, z in Z2); index 2*u + z with u_1 the low bit.
Group armanios_wells_group();
// Generators g_1..g_4 and the central element a of armanios_wells_group().
std::vector<Element> armanios_wells_generators();
Element armanios_wells_central();

Group read_group_table(std::istream& in, std::string name = {});
Group load_group_table(const std::string& path);
void write_group_table(std::ostream& out, const Group& g);

struct GroupQueries {
    SubgroupHandle center;
    bool is_abelian;
    std::vector<Element> involutions;
    std::vector<std::size_t> element_orders;
};
GroupQueries group_queries(const Group& g);

// Number of elements of each order, indexed by order.
std::vector<std::size_t> order_profile(const Group& g);

SubgroupHandle subgroup_closure(const Group& g, std::span<const Element> gens);
bool is_normal(const SubgroupHandle& h);
// Right cosets Hx, each sorted, listed by smallest member.
std::vector<std::vector<Element>> right_cosets(const SubgroupHandle& h);
// Throws unless h is normal.  Coset i of right_cosets(h) becomes element i.
Group quotient_group(const SubgroupHandle& h);

struct SubgroupOps {
    SubgroupHandle closure;
    bool is_normal;
    std::vector<std::vector<Element>> right_cosets;
    std::optional<Group> quotient;
};
SubgroupOps subgroup_ops(const Group& g, std::span<const Element> x);

// Parses "cyclic:n", "dihedral:2n", "elemab:p:k", "sym:n", "alt:n",
// "semifield:q", "metacyclic:n:m:r", "armanios-wells", "gendihedral:<spec>", "table:path";
// factors joined by '*' form a direct product.
Group parse_group_spec(std::string_view spec);

}  // namespace drg
