#pragma once

#include <array>
#include <string>
#include <vector>

#include "auxpose/image.hpp"

namespace auxpose {

// Canonical part order. Everything downstream (pose vectors, spatial terms,
// metrics files) indexes parts in this order.
enum class SemanticPart { Head = 0, AbdomenTip = 1, LeftWingTip = 2, RightWingTip = 3 };
inline constexpr int kNumParts = 4;
const char* part_name(int part);
int part_from_name(const std::string& name);

struct LandmarkSet {
    std::array<Vec2, kNumParts> locations{};
    std::array<bool, kNumParts> occluded{};
};

// Flattened 8-vector: (x,y) per part in canonical order.
struct Pose2D {
    std::array<double, 2 * kNumParts> v{};
};

Pose2D pose_vector(const LandmarkSet& landmarks);
LandmarkSet landmarks_from_pose(const Pose2D& pose);
double pose_distance(const Pose2D& a, const Pose2D& b);

inline constexpr int kPatchSize = 64;
inline constexpr int kPatchHalf = kPatchSize / 2;

// 64x64 crop, fully inside the source image.
struct Patch {
    std::array<double, kPatchSize * kPatchSize> pixels{};
    int source_image_id = -1;
    Vec2i center{};

    double at(int x, int y) const { return pixels[static_cast<size_t>(y) * kPatchSize + x]; }
    double& at(int x, int y) { return pixels[static_cast<size_t>(y) * kPatchSize + x]; }
};

// True iff a 64x64 patch centered at (cx,cy) lies fully inside a WxH image.
bool patch_center_valid(int cx, int cy, int width, int height);

// Crop rows [cy-32, cy+31], cols [cx-32, cx+31]. Out-of-bounds centers are
// rejected, never padded.
Patch extract_patch(const GrayImage& image, Vec2i center, int source_image_id = -1);

struct ManifestEntry {
    std::string image_path;   // resolved absolute/relative-to-cwd path
    LandmarkSet landmarks;
    std::string mask_path;    // empty if none
    bool is_train = false;
};

struct DatasetManifest {
    std::vector<ManifestEntry> entries;

    std::vector<int> split_indices(bool train) const;
};

// Parses the manifest format described in the README:
//   image-path;x1,y1,...,x4,y4;o1,o2,o3,o4;train|test[;mask=mask-path]
// Relative paths resolve against the manifest's directory. Every referenced
// file must exist. Malformed records are rejected with their entry number.
DatasetManifest load_dataset(const std::string& manifest_path);

void save_manifest(const DatasetManifest& manifest, const std::string& path);

}  // namespace auxpose
