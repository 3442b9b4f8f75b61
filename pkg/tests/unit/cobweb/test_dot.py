"""
DOT export tests
"""

from cobweb_lab.cobweb import complete_chain, delete_arcs, dibiclique, to_dot


class TestToDot:
    def test_biclique_output(self):
        text = to_dot(dibiclique(1, 2), name="biclique")
        assert text == (
            "digraph biclique {\n"
            "\trankdir = BT;\n"
            "\tsubgraph level_1 {\n"
            "\t\trank = same;\n"
            '\t\t"L1_0" [label="L1_0"];\n'
            "\t}\n"
            "\tsubgraph level_2 {\n"
            "\t\trank = same;\n"
            '\t\t"L2_0" [label="L2_0"];\n'
            '\t\t"L2_1" [label="L2_1"];\n'
            "\t}\n"
            '\t"L1_0" -> "L2_0";\n'
            '\t"L1_0" -> "L2_1";\n'
            "}\n"
        )

    def test_one_subgraph_per_level(self):
        text = to_dot(complete_chain((2, 3, 1)))
        assert text.count("subgraph level_") == 3
        assert text.count("rank = same;") == 3

    def test_arcs_follow_blocks(self):
        c = delete_arcs(dibiclique(2, 3), 0, [(0, 1), (1, 2)])
        text = to_dot(c)
        assert text.count(" -> ") == 4
        assert '"L1_0" -> "L2_1"' not in text
        assert '"L1_1" -> "L2_2"' not in text
        assert '"L1_0" -> "L2_2"' in text

    def test_single_level_has_no_arcs(self):
        assert " -> " not in to_dot(complete_chain((3,)))
