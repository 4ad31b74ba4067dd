package org.fixture.cloud;

import java.io.IOException;
import java.util.Map;

import org.apache.log4j.Logger;

public class ParamProcessWorker implements Runnable {
    private static final Logger s_logger = Logger.getLogger(ParamProcessWorker.class);

    private final Map<String, String> params;

    public ParamProcessWorker(Map<String, String> params) {
        this.params = params;
    }

    @Override
    public void run() {
        try {
            processParameters(params);
        } catch (IOException e) {
            s_logger.error("Exception while processing the parameters");
        } catch (InterruptedException e) {
            s_logger.error("Exception while processing the parameters");
        }
    }

    private void processParameters(Map<String, String> values) throws IOException, InterruptedException {
        for (Map.Entry<String, String> entry : values.entrySet()) {
            apply(entry.getKey(), entry.getValue());
        }
    }

    private void apply(String key, String value) throws IOException, InterruptedException {
        if (key == null) {
            throw new IOException("missing key");
        }
    }
}
