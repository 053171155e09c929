#include "compdual/operators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace compdual {

namespace {

void require_nonnegative(int i, const char* what)
{
    if (i < 0)
        throw std::invalid_argument(std::string(what) + ": negative operator index");
}

Part incremented(Part p)
{
    if (p == std::numeric_limits<Part>::max())
        throw std::overflow_error("composition part overflow");
    return p + 1;
}

}  // namespace

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw std::invalid_argument("index set has repeated elements");
    if (!elements_.empty() && elements_.front() < 1)
        throw std::invalid_argument("index set elements must be positive");
}

IndexSet::IndexSet(std::initializer_list<int> elements) : IndexSet(std::vector<int>(elements)) {}

IndexSet IndexSet::range(int n)
{
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        out.push_back(k);
    return IndexSet(std::move(out));
}

IndexSet IndexSet::from_mask(unsigned long mask)
{
    std::vector<int> out;
    for (int k = 0; mask != 0; ++k, mask >>= 1)
        if (mask & 1UL)
            out.push_back(k + 1);
    return IndexSet(std::move(out));
}

bool IndexSet::contains(int i) const
{
    return std::binary_search(elements_.begin(), elements_.end(), i);
}

IndexSet IndexSet::with(int i) const
{
    if (contains(i))
        return *this;
    auto out = elements_;
    out.push_back(i);
    return IndexSet(std::move(out));
}

IndexSet IndexSet::without(int i) const
{
    auto out = elements_;
    out.erase(std::remove(out.begin(), out.end(), i), out.end());
    return IndexSet(std::move(out));
}

IndexSet IndexSet::below(int i) const
{
    std::vector<int> out;
    std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(out),
                 [i](int j) { return j < i; });
    return IndexSet(std::move(out));
}

IndexSet IndexSet::above(int i) const
{
    std::vector<int> out;
    std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(out),
                 [i](int j) { return j > i; });
    return IndexSet(std::move(out));
}

IndexSet IndexSet::shifted_down() const
{
    std::vector<int> out;
    for (int j : elements_)
        if (j > 1)
            out.push_back(j - 1);
    return IndexSet(std::move(out));
}

std::string to_string(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != 0)
            out += ",";
        out += std::to_string(s.elements()[k]);
    }
    return out + "}";
}

OpResult box_remove(int i, const WeakComposition& w)
{
    require_nonnegative(i, "box_remove");
    if (i == 0)
        return w;
    auto parts = w.parts();
    for (std::size_t k = parts.size(); k-- > 0;) {
        if (parts[k] == i) {
            std::vector<Part> out(parts.begin(), parts.end());
            --out[k];
            return WeakComposition(std::move(out));
        }
    }
    return OpResult::zero();
}

OpResult box_remove_set(const IndexSet& set, const WeakComposition& w)
{
    OpResult r = w;
    const auto& e = set.elements();
    // Largest index is innermost.
    for (auto it = e.rbegin(); it != e.rend() && !r.is_zero(); ++it)
        r = box_remove(*it, r.value());
    return r;
}

WeakComposition append(int i, const WeakComposition& w)
{
    require_nonnegative(i, "append");
    std::vector<Part> out(w.parts().begin(), w.parts().end());
    out.push_back(i);
    return WeakComposition(std::move(out));
}

OpResult jdt_add(int i, const WeakComposition& w)
{
    require_nonnegative(i, "jdt_add");
    if (i == 0)
        return w;
    auto stripped = box_remove_set(IndexSet::range(i - 1), w);
    if (stripped.is_zero())
        return stripped;
    return append(i, stripped.value());
}

OpResult jdt_add_set(const IndexSet& set, const WeakComposition& w)
{
    OpResult r = w;
    // Smallest index is innermost.
    for (auto it = set.elements().begin(); it != set.elements().end() && !r.is_zero(); ++it)
        r = jdt_add(*it, r.value());
    return r;
}

OpResult box_add(int i, const WeakComposition& w)
{
    require_nonnegative(i, "box_add");
    if (i == 0)
        return w;
    std::vector<Part> out(w.parts().begin(), w.parts().end());
    if (i == 1) {
        out.insert(out.begin(), 1);
        return WeakComposition(std::move(out));
    }
    auto it = std::find(out.begin(), out.end(), i - 1);
    if (it == out.end())
        return OpResult::zero();
    *it = incremented(*it);
    return WeakComposition(std::move(out));
}

OpResult box_remove(int i, const OpResult& r) { return r ? box_remove(i, r.value()) : r; }
OpResult box_remove_set(const IndexSet& s, const OpResult& r) { return r ? box_remove_set(s, r.value()) : r; }
OpResult append(int i, const OpResult& r) { return r ? OpResult(append(i, r.value())) : r; }
OpResult jdt_add(int i, const OpResult& r) { return r ? jdt_add(i, r.value()) : r; }
OpResult box_add(int i, const OpResult& r) { return r ? box_add(i, r.value()) : r; }

OpResult apply(const Atom& atom, const WeakComposition& w)
{
    switch (atom.kind) {
    case OpKind::BoxRemove:
        return box_remove(atom.index, w);
    case OpKind::Append:
        return append(atom.index, w);
    case OpKind::JdtAdd:
        return jdt_add(atom.index, w);
    case OpKind::BoxAdd:
        return box_add(atom.index, w);
    }
    throw std::logic_error("unknown operator kind");
}

OperatorWord::OperatorWord(std::vector<Atom> letters) : letters_(std::move(letters))
{
    for (const auto& atom : letters_)
        require_nonnegative(atom.index, "OperatorWord");
}

OperatorWord::OperatorWord(std::initializer_list<Atom> letters)
    : OperatorWord(std::vector<Atom>(letters))
{
}

OperatorWord OperatorWord::then_after(const OperatorWord& rhs) const
{
    auto out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return OperatorWord(std::move(out));
}

OperatorWord box_remove_word(const IndexSet& set)
{
    std::vector<Atom> letters;
    for (int i : set.elements())
        letters.push_back(d(i));
    return OperatorWord(std::move(letters));
}

OpResult eval_word(const OperatorWord& word, const WeakComposition& w)
{
    OpResult r = w;
    const auto& letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend() && !r.is_zero(); ++it)
        r = apply(*it, r.value());
    return r;
}

OpResult eval_word(const OperatorWord& word, const OpResult& r)
{
    return r ? eval_word(word, r.value()) : r;
}

char op_letter(OpKind kind)
{
    switch (kind) {
    case OpKind::BoxRemove:
        return 'd';
    case OpKind::Append:
        return 'a';
    case OpKind::JdtAdd:
        return 'u';
    case OpKind::BoxAdd:
        return 't';
    }
    return '?';
}

OpKind op_kind_from_letter(char c)
{
    switch (c) {
    case 'd':
        return OpKind::BoxRemove;
    case 'a':
        return OpKind::Append;
    case 'u':
        return OpKind::JdtAdd;
    case 't':
        return OpKind::BoxAdd;
    default:
        throw std::invalid_argument(std::string("unknown operator letter '") + c + "'");
    }
}

std::string to_string(const Atom& atom)
{
    return std::string(1, op_letter(atom.kind)) + std::to_string(atom.index);
}

std::string to_string(const OperatorWord& word)
{
    if (word.empty())
        return "Id";
    std::string out;
    for (std::size_t k = 0; k < word.letters().size(); ++k) {
        if (k != 0)
            out += ' ';
        out += to_string(word.letters()[k]);
    }
    return out;
}

}  // namespace compdual
