import java.util.ArrayList;

public class BubbleSortList {
public static void bubbleSort(ArrayList<Integer> list) {
    for (int pass = 0; pass < list.size() - 1; pass++) {
        for (int k = 0; k < list.size() - pass - 1; k++) {
            if (list.get(k) > list.get(k + 1)) {
                Integer temp = list.get(k);
                list.set(k, list.get(k + 1));
                list.set(k + 1, temp);
            }
        }
    }
}
}
