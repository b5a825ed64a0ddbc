####################################################################
# ### gin_jinja2.py                                              ###
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

from jinja2 import Environment, FileSystemLoader, select_autoescape
from typing import List, Optional, Text, Union


class Jinja2TemplateRenderer(object):
    """
    Writes report files from Jinja2 templates. The bundled templates directory is always searched last.
    """

    def __init__(self, templates_dir: Optional[Union[Text, List[Text]]] = None) -> None:
        """
        Constructor for Jinja2TemplateRenderer.

        :param templates_dir: Extra directory or directories searched before the bundled templates.
        """
        bundled: Text = os.path.abspath(os.path.join(os.path.dirname(os.path.realpath(__file__)), "..", "templates"))

        templates: List[Text] = list()
        if isinstance(templates_dir, list):
            templates.extend(templates_dir)
        elif templates_dir is not None:
            templates.append(templates_dir)
        templates.append(bundled)

        self.file_loader: FileSystemLoader = FileSystemLoader(templates)

    def render(self, template_name: Text, trim_blocks: bool = True, lstrip_blocks: bool = True, **kwargs) -> Text:
        env: Environment = Environment(loader=self.file_loader, autoescape=select_autoescape(["html", "xml", "j2"]),
                                       trim_blocks=trim_blocks, lstrip_blocks=lstrip_blocks)
        return env.get_template(template_name).render(**kwargs)

    def as_html(self, template_name: Text, destination: Text, trim_blocks: bool = True, lstrip_blocks: bool = True,
                **kwargs) -> Text:
        """
        Renders a template and writes it to a file.

        :param template_name: The name of the template to use.
        :param destination: The path of the output file.
        :param trim_blocks: Remove the first newline after a block.
        :param lstrip_blocks: Strip whitespace before a block tag.
        :param kwargs: Values used by the template.
        :return: The absolute path to the new file.
        """
        contents: Text = self.render(template_name, trim_blocks, lstrip_blocks, **kwargs)

        # characters that cannot be encoded are replaced rather than failing the report
        with open(destination, "w+", encoding="utf-8", errors="replace") as f:
            f.write(contents)

        return os.path.abspath(destination)
