#include "ctxsugg/types.hpp"

#include <algorithm>

namespace ctxsugg {

bool rating_in_domain(int rating) noexcept {
    return rating >= kMinRating && rating <= kMaxRating;
}

void add_tag(TagSet& tags, Tag tag) {
    auto it = std::lower_bound(tags.begin(), tags.end(), tag.text,
                               [](const Tag& t, const std::string& text) { return t.text < text; });
    if (it != tags.end() && it->text == tag.text) return;
    tags.insert(it, std::move(tag));
}

bool contains_tag(const TagSet& tags, const std::string& text) {
    auto it = std::lower_bound(tags.begin(), tags.end(), text,
                               [](const Tag& t, const std::string& s) { return t.text < s; });
    return it != tags.end() && it->text == text;
}

TagSet intersect_tags(const TagSet& a, const TagSet& b) {
    TagSet out;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->text == ib->text) {
            out.push_back(*ia);
            ++ia;
            ++ib;
        } else if (ia->text < ib->text) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return out;
}

}  // namespace ctxsugg
