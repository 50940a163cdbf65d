from pathlib import Path

import pytest

from swarmclique import (ParseError, ParseWarning, parse_edge_list, parse_gml,
                         parse_pajek, to_edge_list)
from swarmclique.datasets import bundled_path
from swarmclique.io import load_graph

DATA = Path(__file__).parent / "data"


class TestEdgeList:
    def test_triangle(self):
        g = parse_edge_list("0 1\n1 2\n0 2")
        assert (g.n, g.m) == (3, 3)

    def test_duplicate_collapse(self):
        g = parse_edge_list("a b\nb a")
        assert (g.n, g.m) == (2, 1)
        assert g.labels == ("a", "b")

    def test_empty_input(self):
        g = parse_edge_list("")
        assert (g.n, g.m) == (0, 0)

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# head\n\n% other comment\n0 1\n")
        assert (g.n, g.m) == (2, 1)

    def test_malformed_line_reports_number(self):
        with pytest.raises(ParseError, match="line 3"):
            parse_edge_list("0 1\n1 2\n0 1 2\n")

    def test_self_loops_dropped_with_warning(self):
        with pytest.warns(ParseWarning, match="2 self-loop"):
            g = parse_edge_list("0 0\n0 1\n1 1")
        assert (g.n, g.m) == (2, 1)

    def test_first_appearance_indexing(self):
        g = parse_edge_list("x y\ny z")
        assert g.labels == ("x", "y", "z")
        assert g.edges == ((0, 1), (1, 2))


class TestPajek:
    def test_minimal(self):
        g = parse_pajek('*Vertices 3\n1 "a"\n2 "b"\n3 "c"\n*Edges\n1 2')
        assert (g.n, g.m) == (3, 1)
        assert g.labels == ("a", "b", "c")
        assert g.has_edge(0, 1)

    def test_bundled_karate_counts(self):
        g = load_graph(bundled_path("karate"), "pajek")
        assert (g.n, g.m) == (34, 78)

    def test_bundled_dolphins_counts(self):
        g = load_graph(bundled_path("dolphins"), "pajek")
        assert (g.n, g.m) == (62, 159)
        assert g.labels[14] == "Grin"

    def test_bundled_graphs_satisfy_graph_invariants(self):
        from test_graph import check_valid
        for name in ("karate", "dolphins"):
            check_valid(load_graph(bundled_path(name), "pajek"))

    def test_arcs_are_symmetrized(self):
        g = parse_pajek("*Vertices 2\n*Arcs\n1 2\n2 1")
        assert (g.n, g.m) == (2, 1)

    def test_edge_weights_discarded(self):
        g = parse_pajek("*Vertices 2\n*Edges\n1 2 3.5")
        assert g.m == 1

    def test_edgeslist_section(self):
        g = parse_pajek("*Vertices 4\n*Edgeslist\n1 2 3 4")
        assert g.m == 3
        assert g.neighbors(0) == [1, 2, 3]

    def test_missing_vertices_header(self):
        with pytest.raises(ParseError, match=r"\*Vertices"):
            parse_pajek("*Edges\n1 2")

    def test_id_out_of_declared_range(self):
        with pytest.raises(ParseError, match="outside"):
            parse_pajek("*Vertices 2\n*Edges\n1 3")

    def test_vertex_labels_optional(self):
        g = parse_pajek("*Vertices 2\n*Edges\n1 2")
        assert g.labels == ("1", "2")

    def test_comment_lines(self):
        g = parse_pajek("% pajek comment\n*Vertices 2\n*Edges\n1 2")
        assert g.m == 1


class TestGml:
    def test_minimal_one_edge(self):
        g = parse_gml("graph [ node [ id 10 ] node [ id 20 ] "
                      "edge [ source 10 target 20 ] ]")
        assert (g.n, g.m) == (2, 1)

    def test_karate_gml_fixture(self):
        g = load_graph(DATA / "karate.gml")
        assert (g.n, g.m) == (34, 78)

    def test_directed_flag_normalized(self):
        g = parse_gml("graph [ directed 1 node [ id 0 ] node [ id 1 ] "
                      "edge [ source 0 target 1 ] edge [ source 1 target 0 ] ]")
        assert (g.n, g.m) == (2, 1)

    def test_labels_kept(self):
        g = parse_gml('graph [ node [ id 0 label "alpha" ] node [ id 1 ] '
                      "edge [ source 0 target 1 ] ]")
        assert g.labels == ("alpha", "1")

    def test_unbalanced_brackets(self):
        with pytest.raises(ParseError, match="unbalanced"):
            parse_gml("graph [ node [ id 0 ]")

    def test_undeclared_id(self):
        with pytest.raises(ParseError, match="undeclared"):
            parse_gml("graph [ node [ id 0 ] edge [ source 0 target 9 ] ]")

    def test_nested_attribute_blocks_skipped(self):
        g = parse_gml("graph [ node [ id 0 graphics [ x 1 y 2 ] ] "
                      "node [ id 1 ] edge [ source 0 target 1 ] ]")
        assert (g.n, g.m) == (2, 1)

    def test_self_loop_warning(self):
        with pytest.warns(ParseWarning):
            g = parse_gml("graph [ node [ id 0 ] edge [ source 0 target 0 ] ]")
        assert (g.n, g.m) == (1, 0)


class TestSerializer:
    def test_sorted_canonical_lines(self):
        g = parse_edge_list("2 1\n0 2\n1 0")
        # indices: 2->0, 1->1, 0->2; sorted pairs of the relabeled graph
        assert to_edge_list(g) == "0 1\n0 2\n1 2\n"

    def test_roundtrip_is_isomorphic_via_labels(self):
        for seed in range(8):
            from swarmclique import gnp_random
            g1 = gnp_random(15, 0.4, seed=seed)
            g2 = parse_edge_list(to_edge_list(g1))
            # g2 labels are g1's vertex indices as strings
            mapped = {tuple(sorted((int(g2.label_of(u)), int(g2.label_of(v)))))
                      for u, v in g2.edges}
            assert g2.n == len({v for e in g1.edges for v in e})
            assert mapped == set(g1.edges)

    def test_parse_serialize_fixpoint_after_one_pass(self):
        text = "0 1\n0 2\n1 2\n"
        assert to_edge_list(parse_edge_list(text)) == text


class TestLoadGraph:
    def test_format_inferred_from_extension(self, tmp_path):
        p = tmp_path / "tiny.net"
        p.write_text("*Vertices 2\n*Edges\n1 2\n")
        assert load_graph(p).m == 1

    def test_explicit_format_overrides(self, tmp_path):
        p = tmp_path / "data.weird"
        p.write_text("0 1\n")
        assert load_graph(p, "edgelist").m == 1

    def test_unknown_format_rejected(self, tmp_path):
        p = tmp_path / "x.txt"
        p.write_text("0 1\n")
        with pytest.raises(ValueError, match="unknown graph format"):
            load_graph(p, "xml")
