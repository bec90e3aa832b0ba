class BaseService:
    """
    Common root of the cutting, training and detection services.

    Subclasses mix in Configurable and Loggable and set ``service_name``;
    construction reads the settings first so the logger can honour
    ``logging.level``.
    """

    service_name = "service"

    def __init__(self, config=None):
        self.configure(config)
        self.initialize_logger(self.service_name)
