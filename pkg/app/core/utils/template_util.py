import os

from jinja2 import Environment, FileSystemLoader

TEMPLATES_DIR = os.path.join(os.path.dirname(__file__), "templates")

# LaTeX 模板里有大量反斜杠与花括号，不做 HTML 转义
env = Environment(
    loader=FileSystemLoader(TEMPLATES_DIR),
    autoescape=False,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def render_template(file_name: str, **args) -> str:
    """
    根据模版渲染文本

    Args:
        file_name: templates 目录下的模板文件名
        **args: 模板变量

    Returns:
        渲染后的文本
    """
    template = env.get_template(file_name)
    return template.render(**args)
