#include "ctxsugg/enrich.hpp"

#include "ctxsugg/text.hpp"

namespace ctxsugg {

std::vector<std::string> tag_terms(const Tag& tag, const Lexicon& lexicon) {
    std::vector<std::string> terms;
    for (auto& word : tokenize_words(tag.text)) {
        if (!lexicon.is_stopword(word)) terms.push_back(std::move(word));
    }
    return terms;
}

namespace {

bool all_terms_match(const Description& desc, const std::vector<std::string>& terms,
                     const SimilarityProvider& provider, double threshold, bool strict) {
    if (terms.empty() || desc.empty()) return false;
    for (const auto& term : terms) {
        bool matched = false;
        for (const auto& token : desc.tokens) {
            double s = provider.word_similarity(term, token);
            if (strict ? s > threshold : s >= threshold) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace

bool match_specific_tag(const Description& desc, const std::vector<std::string>& terms,
                        const SimilarityProvider& provider) {
    // ">= 0.95": under the quantized default provider only exact matches pass.
    return all_terms_match(desc, terms, provider, kSpecificTagThreshold, /*strict=*/false);
}

bool match_generic_tag(const Description& desc, const std::vector<std::string>& terms,
                       const SimilarityProvider& provider) {
    // strictly "> 0.75", so default-weight synonyms (0.8) qualify.
    return all_terms_match(desc, terms, provider, kGenericTagThreshold, /*strict=*/true);
}

Enricher::Enricher(const std::vector<Tag>& tagset, const SimilarityProvider& provider)
    : provider_(&provider) {
    tags_.reserve(tagset.size());
    for (const auto& tag : tagset) {
        tags_.push_back(PreparedTag{tag, tag_terms(tag, provider.lexicon())});
    }
}

TagSet Enricher::matching_tags(const Description& filtered_desc) const {
    TagSet out;
    for (const auto& prepared : tags_) {
        bool matched = prepared.tag.kind == TagKind::Specific
                           ? match_specific_tag(filtered_desc, prepared.terms, *provider_)
                           : match_generic_tag(filtered_desc, prepared.terms, *provider_);
        if (matched) add_tag(out, prepared.tag);
    }
    return out;
}

ProfileAttraction Enricher::enrich_attraction(const ProfileAttraction& attraction) const {
    if (!attraction.tags.empty()) return attraction;
    TagSet tags = matching_tags(filter_description(attraction.description, provider_->lexicon()));
    if (tags.empty()) return attraction;
    ProfileAttraction out = attraction;
    out.tags = std::move(tags);
    out.tags_source = TagSource::Enriched;
    return out;
}

UserProfile Enricher::enrich_profile(const UserProfile& profile) const {
    UserProfile out;
    out.user_id = profile.user_id;
    out.attractions.reserve(profile.attractions.size());
    for (const auto& attraction : profile.attractions) {
        out.attractions.push_back(enrich_attraction(attraction));
    }
    return out;
}

Request Enricher::enrich_candidates(const Request& request) const {
    Request out;
    out.request_id = request.request_id;
    out.user_id = request.user_id;
    out.candidates.reserve(request.candidates.size());
    for (const auto& candidate : request.candidates) {
        if (!candidate.tags.empty()) {
            out.candidates.push_back(candidate);
            continue;
        }
        Candidate enriched = candidate;
        enriched.tags =
            matching_tags(filter_description(candidate.description, provider_->lexicon()));
        out.candidates.push_back(std::move(enriched));
    }
    return out;
}

}  // namespace ctxsugg
