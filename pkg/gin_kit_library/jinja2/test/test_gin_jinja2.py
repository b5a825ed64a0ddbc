####################################################################
# ### test_gin_jinja2.py                                         ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################
import os

from gin_kit_library.jinja2.gin_jinja2 import Jinja2TemplateRenderer

TEMPLATES_DIR_ = os.path.join(os.path.dirname(os.path.abspath(__file__)), "templates")


def test_as_html(tmp_path) -> None:
    """
    Tests that a template from an extra directory is rendered to a file.
    """
    renderer = Jinja2TemplateRenderer(TEMPLATES_DIR_)

    created_file = renderer.as_html("unit_test.html.j2", os.path.join(str(tmp_path), "unit_test.html"),
                                    test_page_content="Hello World!")

    assert os.path.isfile(created_file)
    with open(created_file, "r", encoding="utf-8") as f:
        assert "Hello World!" in f.read()


def test_as_html_non_utf8_content(tmp_path) -> None:
    """
    Tests that non-ASCII content is written without failing.
    """
    renderer = Jinja2TemplateRenderer([TEMPLATES_DIR_])

    created_file = renderer.as_html("unit_test.html.j2", os.path.join(str(tmp_path), "unit_test.html"),
                                    test_page_content="None unicode test value: " + "\x54\xea\x73\x74")

    assert os.stat(created_file).st_size != 0


def test_render_escapes_markup() -> None:
    """
    Tests that values are HTML-escaped.
    """
    contents = Jinja2TemplateRenderer(TEMPLATES_DIR_).render("unit_test.html.j2", test_page_content="<b>x</b>")

    assert "&lt;b&gt;x&lt;/b&gt;" in contents


def test_bundled_templates_are_found() -> None:
    """
    Tests that the bundled report template is reachable without an extra directory.
    """
    contents = Jinja2TemplateRenderer().render("eval_report.html.j2", report={
        "task": "reconstruct", "with_matching": False, "threshold": 0.5, "masked_count": 1, "counts": {},
        "unobs_auc": None, "unobs_acc": None, "unobs_tpr": None, "unobs_fpr": None, "whole_auc": None,
        "reconstruction_auc": None, "obs_state_metric": "mse", "obs_state_score": None, "hidden_init_score": None,
        "structure": {}, "permutation": []})

    assert "Evaluation Report" in contents
