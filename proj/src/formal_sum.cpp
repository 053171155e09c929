#include "compdual/formal_sum.hpp"

#include <stdexcept>

namespace compdual {

FormalSum::FormalSum(std::initializer_list<std::pair<Composition, long>> terms)
{
    for (const auto& [c, k] : terms)
        add(c, Coeff(k));
}

Coeff FormalSum::coefficient(const Composition& c) const
{
    auto it = terms_.find(c);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void FormalSum::add(const Composition& c, const Coeff& k)
{
    if (k == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(c, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void FormalSum::add(const OpResult& r, const Coeff& k)
{
    if (!r.is_zero())
        add(flatten(r.value()), k);
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs)
{
    if (&rhs == this)
        return *this *= 2;
    for (const auto& [c, k] : rhs.terms_)
        add(c, k);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& rhs)
{
    if (&rhs == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [c, k] : rhs.terms_)
        add(c, -k);
    return *this;
}

FormalSum& FormalSum::operator*=(const Coeff& k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_)
        v *= k;
    return *this;
}

namespace {

template <typename Render>
std::string render_sum(const FormalSum& s, Render render)
{
    if (s.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, k] : s.terms()) {
        Coeff mag = k < 0 ? Coeff(-k) : k;
        if (first)
            out += k < 0 ? "-" : "";
        else
            out += k < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.str() + "*";
        out += render(c);
        first = false;
    }
    return out;
}

}  // namespace

std::string to_string(const FormalSum& s)
{
    return render_sum(s, [](const Composition& c) { return to_string(c); });
}

std::string compact_string(const FormalSum& s)
{
    return render_sum(s, [](const Composition& c) { return compact_string(c.parts()); });
}

FormalSum apply_pointwise(const FormalSum& s,
                          const std::function<void(const Composition&, std::vector<OpResult>&)>& f)
{
    FormalSum out;
    std::vector<OpResult> images;
    for (const auto& [c, k] : s.terms()) {
        images.clear();
        f(c, images);
        for (const auto& r : images)
            out.add(r, k);
    }
    return out;
}

FormalSum up_R(const FormalSum& s)
{
    return apply_pointwise(s, [](const Composition& c, std::vector<OpResult>& out) {
        auto w = c.as_weak();
        for (int i = 1; i <= largest_part(c) + 1; ++i)
            out.push_back(jdt_add(i, w));
    });
}

FormalSum down_Q(const FormalSum& s)
{
    return apply_pointwise(s, [](const Composition& c, std::vector<OpResult>& out) {
        auto w = c.as_weak();
        for (int i = 1; i <= largest_part(c); ++i)
            out.push_back(box_remove(i, w));
    });
}

FormalSum up_L(const FormalSum& s)
{
    return apply_pointwise(s, [](const Composition& c, std::vector<OpResult>& out) {
        auto w = c.as_weak();
        for (int i = 1; i <= largest_part(c) + 1; ++i)
            out.push_back(box_add(i, w));
    });
}

FormalSum down_filtered(const FormalSum& s)
{
    return apply_pointwise(s, [](const Composition& c, std::vector<OpResult>& out) {
        const int m = largest_part(c);
        if (m >= 63)
            throw std::out_of_range("down_filtered: largest part too large for subset enumeration");
        auto w = c.as_weak();
        for (unsigned long mask = 1; mask < (1UL << m); ++mask)
            out.push_back(box_remove_set(IndexSet::from_mask(mask), w));
    });
}

LinearOp::LinearOp(Kind kind, const LinearOp& lhs, const LinearOp& rhs)
    : kind_(kind),
      lhs_(std::make_shared<const LinearOp>(lhs)),
      rhs_(std::make_shared<const LinearOp>(rhs))
{
}

FormalSum LinearOp::operator()(const FormalSum& s) const
{
    switch (kind_) {
    case Kind::UpR:
        return compdual::up_R(s);
    case Kind::DownQ:
        return compdual::down_Q(s);
    case Kind::UpL:
        return compdual::up_L(s);
    case Kind::DownFiltered:
        return compdual::down_filtered(s);
    case Kind::Identity:
        return s;
    case Kind::Sum:
        return (*lhs_)(s) + (*rhs_)(s);
    case Kind::Difference:
        return (*lhs_)(s) - (*rhs_)(s);
    case Kind::Product:
        return (*lhs_)((*rhs_)(s));
    }
    throw std::logic_error("unknown LinearOp kind");
}

std::string LinearOp::name() const
{
    switch (kind_) {
    case Kind::UpR:
        return "U";
    case Kind::DownQ:
        return "D";
    case Kind::UpL:
        return "U~";
    case Kind::DownFiltered:
        return "D~";
    case Kind::Identity:
        return "Id";
    case Kind::Sum:
        return "(" + lhs_->name() + " + " + rhs_->name() + ")";
    case Kind::Difference:
        return "(" + lhs_->name() + " - " + rhs_->name() + ")";
    case Kind::Product:
        return lhs_->name() + rhs_->name();
    }
    return "?";
}

FormalSum commutator_minus(const LinearOp& A, const LinearOp& B, const FormalSum& s)
{
    return A(B(s)) - B(A(s));
}

}  // namespace compdual
