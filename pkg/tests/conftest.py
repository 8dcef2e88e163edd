import os
import sys

from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from relator_forge.words import Word  # noqa: E402

letters = st.tuples(st.sampled_from("ab"), st.sampled_from((1, -1)))
raw_words = st.lists(letters, max_size=16)
words = raw_words.map(Word)
short_words = st.lists(letters, max_size=8).map(Word)

