#include <doctest.h>

#include "valkit/errors.hpp"
#include "valkit/words.hpp"

using namespace valkit;

TEST_CASE("word validation") {
    CHECK_THROWS_AS(validate_word({}), domain_error);
    CHECK_THROWS_AS(validate_word({1, 0}), domain_error);
    CHECK_THROWS_AS(validate_word({-3}), domain_error);
    CHECK_NOTHROW(validate_word({1}));
    CHECK_NOTHROW(validate_word({7, 1, 12}));
}

TEST_CASE("opposite and rotation") {
    CHECK(opposite({1, 2, 3}) == Word{3, 2, 1});
    CHECK(opposite({5}) == Word{5});

    const Word w{1, 2, 3, 4};
    CHECK(rotation(w, 1) == w);
    CHECK(rotation(w, 2) == Word{2, 3, 4, 1});
    CHECK(rotation(w, 4) == Word{4, 1, 2, 3});
    CHECK_THROWS_AS(rotation(w, 0), domain_error);
    CHECK_THROWS_AS(rotation(w, 5), domain_error);
}

TEST_CASE("conjunction and even form") {
    CHECK(conjunction({2, 2}, {1, 1}) == Word{2, 2, 1, 1});
    CHECK(even_form({1, 2}) == Word{1, 2});
    CHECK(even_form({3}) == Word{3, 3});
    CHECK(even_form({1, 2, 1}) == Word{1, 2, 1, 1, 2, 1});
}

TEST_CASE("markov letter test and printing") {
    CHECK(is_markov_word({1, 2, 2, 1}));
    CHECK_FALSE(is_markov_word({1, 3}));
    CHECK_FALSE(is_markov_word({}));
    CHECK(word_str({2, 2, 1, 1}) == "[2,2,1,1]");
    CHECK(word_str({7}) == "[7]");
}

TEST_CASE("markov tree structure") {
    auto root = markov_tree(0);
    CHECK(root->word == Word{2, 2, 1, 1});
    CHECK(root->left_neighbor == Word{1, 1});
    CHECK(root->right_neighbor == Word{2, 2});
    CHECK(root->left == nullptr);

    auto t3 = markov_tree(3);
    auto nodes = flatten(*t3);
    CHECK(nodes.size() == 15);  // 2^4 - 1

    // breadth-first: depths are non-decreasing
    for (std::size_t k = 1; k < nodes.size(); ++k)
        CHECK(nodes[k - 1]->depth <= nodes[k]->depth);

    // every node's word is the conjunction of its two neighbor words
    for (const MarkovNode* n : nodes)
        CHECK(n->word == conjunction(n->right_neighbor, n->left_neighbor));

    // the two depth-1 children
    CHECK(t3->left->word == Word{2, 2, 1, 1, 1, 1});
    CHECK(t3->right->word == Word{2, 2, 2, 2, 1, 1});

    // leftmost depth-2 node: one more (1,1) block appended
    CHECK(t3->left->left->word == Word{2, 2, 1, 1, 1, 1, 1, 1});

    // all tree words consist of (1,1)/(2,2) blocks: even positions repeat the
    // preceding odd-position letter
    for (const MarkovNode* n : nodes) {
        REQUIRE(n->word.size() % 2 == 0);
        CHECK(is_markov_word(n->word));
        for (std::size_t k = 0; k + 1 < n->word.size(); k += 2)
            CHECK(n->word[k] == n->word[k + 1]);
    }

    CHECK_THROWS_AS(markov_tree(-1), domain_error);
}
