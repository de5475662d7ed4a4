#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace synprobe::treebank {

// Reserved label returned when an ancestor query walks past the root.
inline constexpr const char* kNoneLabel = "<none>";

struct TreeParseError : std::runtime_error {
  TreeParseError(const std::string& msg, std::size_t offset);
  std::size_t offset;
};

// Rooted labeled ordered tree over a token sequence. Leaves are token nodes
// whose parent is a preterminal; spans are word-index intervals [begin, end).
struct Tree {
  struct Node {
    std::string label;          // empty on leaf token nodes
    std::string token;          // set on leaves only
    std::vector<int> children;  // empty on leaves
    int parent = -1;
    int begin = 0;
    int end = 0;
    bool is_leaf() const { return children.empty(); }
  };

  std::vector<Node> nodes;
  int root = -1;

  bool empty() const { return root < 0; }
  int num_words() const;
  const Node& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }

  // Leaf node indices in word order; leaves[w] is the leaf for word w.
  std::vector<int> leaves() const;
  // Preterminal node indices in word order.
  std::vector<int> preterminals() const;
  std::vector<std::string> words() const;

  // Recomputes parent pointers and spans from the children lists.
  void refresh();
  // Throws std::invalid_argument if a structural invariant is broken.
  void validate() const;
};

// Parses one Penn-style bracketing. Function tags and indices on labels
// ("NP-SBJ", "NP=2") are stripped to the base category; empty-element
// subtrees headed by -NONE- are removed together with any unary chain left
// childless. Throws TreeParseError with a character offset on bad input.
Tree parse_bracketed(std::string_view text);

// Inverse of parse_bracketed for normalized trees; single space between
// tokens.
std::string to_bracketed(const Tree& tree);

// One bracketed tree per line; blank lines ignored.
std::vector<Tree> read_trees_file(const std::string& path);
void write_trees_file(const std::string& path, std::span<const Tree> trees);

// Label of the ancestor `depth` levels above word_index's preterminal
// (depth 0 = the preterminal itself). Returns kNoneLabel once the path
// exits the root. Throws std::out_of_range on a bad word index or depth.
std::string ancestor_label(const Tree& tree, int word_index, int depth);

// The four prediction tasks, ordered by ancestor depth.
enum class AncestorTask { kPos = 0, kParent = 1, kGrandparent = 2, kGreatGrandparent = 3 };
inline constexpr int kNumTasks = 4;

int task_depth(AncestorTask task);
std::string_view task_name(AncestorTask task);
AncestorTask task_from_name(std::string_view name);

struct LabeledWordExample {
  int sentence_id = 0;
  int word_index = 0;
  std::string word;
  std::array<std::string, 4> labels;  // depth 0..3

  const std::string& label(AncestorTask task) const {
    return labels[static_cast<std::size_t>(task_depth(task))];
  }
};

// One example per word per sentence, in corpus order.
std::vector<LabeledWordExample> make_examples(std::span<const Tree> trees);

// Tree over words [0, k): nodes whose span lies entirely at or beyond k are
// deleted, straddling nodes keep their surviving children, internal nodes
// left childless are deleted. 1 <= k <= num_words().
Tree truncate_to_prefix(const Tree& tree, int k);

}  // namespace synprobe::treebank
