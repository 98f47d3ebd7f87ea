#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tagsim {

// One tag as delivered by the metadata source; count capped to 100.
struct RawTag {
  std::string name;
  int count = 0;
};

// A song document exactly as parsed from songs.jsonl.
struct RawSongDoc {
  std::string name;
  std::vector<RawTag> tags;
  std::string album_mbid;
  std::string artist_name;
  std::string mbid;
  std::string album_title;
  std::string artist_mbid;
};

struct SongTag {
  std::string tag_norm;
  int count = 0;  // 1..100
  bool operator==(const SongTag&) const = default;
};

// Normalized song with sequential integer ids per namespace.
// Tags are unique by tag_norm and sorted by name.
struct SongRecord {
  int song_id = -1;
  int artist_id = -1;
  int album_id = -1;
  std::string name_norm;
  std::string artist_norm;
  std::string album_norm;
  std::vector<SongTag> tags;
  bool operator==(const SongRecord&) const = default;
};

// Assigns 0,1,2,... to keys in first-seen order.
class IdAssigner {
public:
  int assign(const std::string& key) {
    auto [it, inserted] = map_.emplace(key, static_cast<int>(keys_.size()));
    if (inserted) keys_.push_back(key);
    return it->second;
  }

  std::optional<int> lookup(const std::string& key) const {
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return keys_.size(); }

  // Keys in id order: keys()[id] is the key assigned to id.
  const std::vector<std::string>& keys() const { return keys_; }

private:
  std::unordered_map<std::string, int> map_;
  std::vector<std::string> keys_;
};

struct UserHistory {
  long long user_id = 0;
  std::vector<int> song_ids;  // sorted, unique, non-empty
  bool operator==(const UserHistory&) const = default;
};

}  // namespace tagsim
