#pragma once

#include <filesystem>
#include <string>

#include "cdk/measure.hpp"

namespace cdk {

enum class CloudFormat { Auto, Csv, Json };

// CSV clouds: header "re1,im1,...,red,imd" with an optional trailing
// "weight" column; '#' starts a comment; parse errors report line numbers.
// A missing weight column assigns 1/N to every atom.
DiscreteMeasure parse_cloud_csv(const std::string& text);
std::string format_cloud_csv(const DiscreteMeasure& measure);

// JSON clouds: {"d": int, "atoms": [[re1, im1, ..., red, imd], ...],
// "weights": [...]}; "weights" may be omitted (1/N default).
DiscreteMeasure parse_cloud_json(const std::string& text);
std::string format_cloud_json(const DiscreteMeasure& measure);

// Format Auto dispatches on the extension (.json vs anything else -> CSV).
// Loaded clouds are validated: duplicate atoms and non-positive weights are
// rejected with the offending indices named.
DiscreteMeasure load_cloud(const std::filesystem::path& path,
                           CloudFormat format = CloudFormat::Auto);
void save_cloud(const DiscreteMeasure& measure, const std::filesystem::path& path,
                CloudFormat format = CloudFormat::Auto);

} // namespace cdk
