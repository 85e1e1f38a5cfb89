# run.py
from app import app
import logging
import webbrowser
from threading import Timer

import config


def open_browser():
    """Mở trình duyệt tới trang liệt kê API sau một khoảng trễ ngắn."""
    webbrowser.open_new(f"http://{config.WEB_HOST}:{config.WEB_PORT}")


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")
    # Hẹn giờ để mở trình duyệt sau 1 giây, đảm bảo server đã khởi động
    Timer(1, open_browser).start()
    app.run(host=config.WEB_HOST, port=config.WEB_PORT, debug=False)
